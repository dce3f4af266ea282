#include "satake/kostka.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace satake {

namespace {

void require_split(const BasedRootDatum& d) {
  if (!d.sigma_is_identity())
    fail(errc::sigma_nontrivial, "operation is only defined for split (sigma = id) data");
}

// positive roots in simple-root coordinates, fixed (height, lex) order
std::vector<Weight> positive_root_coords(const BasedRootDatum& d) {
  std::vector<Weight> out;
  for (auto& r : d.positive_roots) out.push_back(*d.root_lattice_coords(r));
  return out;
}

// partition-count DP over the fixed root order; beta in simple coords
QLaurent kostant_dp(const std::vector<Weight>& roots, size_t idx, const Weight& beta,
                    std::map<std::pair<size_t, Weight>, QLaurent>& memo) {
  bool zero = weight_is_zero(beta);
  if (idx == roots.size()) return QLaurent(zero ? 1 : 0);
  if (zero) return QLaurent(1); // only the empty tail expression remains? no: tail roots with n=0
  auto key = std::make_pair(idx, beta);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  QLaurent acc;
  Weight rem = beta;
  int n = 0;
  while (true) {
    bool feasible = true;
    for (i64 x : rem)
      if (x < 0) feasible = false;
    if (!feasible) break;
    acc += kostant_dp(roots, idx + 1, rem, memo).shifted(n);
    rem = weight_sub(rem, roots[idx]);
    ++n;
  }
  memo.emplace(key, acc);
  return acc;
}

using KostantMemo = std::map<std::pair<size_t, Weight>, QLaurent>;

QLaurent kostant_of_coords(const std::vector<Weight>& roots, const Weight& coords,
                           KostantMemo& memo) {
  for (i64 x : coords)
    if (x < 0) return QLaurent();
  return kostant_dp(roots, 0, coords, memo);
}

Weight sum_positive_roots(const BasedRootDatum& d) {
  Weight r(d.rank, 0);
  for (auto& p : d.positive_roots) r = weight_add(r, p);
  return r;
}

} // namespace

QLaurent q_kostant_partition(const BasedRootDatum& d, const Weight& beta) {
  require_split(d);
  auto coords = d.root_lattice_coords(beta);
  if (!coords) return QLaurent();
  KostantMemo memo;
  return kostant_of_coords(positive_root_coords(d), *coords, memo);
}

QLaurent kostka_foulkes(const BasedRootDatum& d, const Weight& mu, const Weight& lam) {
  require_split(d);
  if (!d.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");
  if (!d.is_dominant(lam)) fail(errc::not_dominant, "lam must be dominant");
  auto W = weyl_elements(d, kWeylCap);
  Weight two_rho_w = sum_positive_roots(d);
  Weight mu2 = weight_add(weight_scale(2, mu), two_rho_w);
  Weight lam2 = weight_add(weight_scale(2, lam), two_rho_w);
  auto roots = positive_root_coords(d);
  KostantMemo memo;
  QLaurent acc;
  for (auto& w : W) {
    Weight delta2 = weight_sub(mat_apply(w.mat, mu2), lam2);
    auto coords2 = d.root_lattice_coords(delta2);
    if (!coords2) continue;
    bool even = true;
    for (i64 x : *coords2) even = even && (x % 2 == 0);
    if (!even) continue; // mu and lam in different root-lattice cosets
    Weight coords(coords2->size());
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = (*coords2)[i] / 2;
    QLaurent p = kostant_of_coords(roots, coords, memo);
    if (w.sign > 0) acc += p;
    else acc -= p;
  }
  return acc;
}

i64 freudenthal_multiplicity(const BasedRootDatum& d, const Weight& mu, const Weight& lam) {
  require_split(d);
  if (!d.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");

  // W-invariant form from the full set of positive coroots
  auto bform = [&](const RatVec& x, const RatVec& y) {
    Rat s(0);
    for (auto& cv : d.positive_coroots) {
      Rat px(0), py(0);
      for (int k = 0; k < d.rank; ++k) {
        px = px + Rat(cv[k]) * x[k];
        py = py + Rat(cv[k]) * y[k];
      }
      s = s + px * py;
    }
    return s;
  };
  auto to_rat = [](const Weight& w) {
    RatVec r;
    for (i64 x : w) r.push_back(Rat(x));
    return r;
  };
  Weight two_rho_w = sum_positive_roots(d);
  auto plus_rho = [&](const Weight& w) {
    RatVec r;
    for (int k = 0; k < d.rank; ++k) r.push_back(Rat(w[k]) + Rat(two_rho_w[k], 2));
    return r;
  };
  Rat top = bform(plus_rho(mu), plus_rho(mu));

  std::map<Weight, i64> memo; // dominant weight -> multiplicity
  std::function<i64(const Weight&)> mult = [&](const Weight& lam0) -> i64 {
    Weight ld = dominant_conjugate(d, lam0);
    if (ld == mu) return 1;
    if (!dominance_leq(d, ld, mu)) return 0;
    auto it = memo.find(ld);
    if (it != memo.end()) return it->second;
    Rat num(0);
    for (auto& alpha : d.positive_roots) {
      for (int k = 1;; ++k) {
        Weight up = weight_add(ld, weight_scale(k, alpha));
        if (!dominance_leq(d, dominant_conjugate(d, up), mu)) break;
        i64 m = mult(up);
        if (m != 0) num = num + Rat(2 * m) * bform(to_rat(up), to_rat(alpha));
      }
    }
    Rat den = top - bform(plus_rho(ld), plus_rho(ld));
    if (den.is_zero()) fail(errc::singular, "vanishing Freudenthal denominator");
    Rat res = num / den;
    if (!res.is_integer()) fail(errc::singular, "non-integer Freudenthal multiplicity");
    memo[ld] = res.num;
    return res.num;
  };
  return mult(lam);
}

std::vector<Weight> dominant_below(const BasedRootDatum& d, const Weight& mu) {
  if (!d.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");
  ShiftCovector rho = rho_ad(d);
  Weight w0mu = antidominant_conjugate(d, mu);
  i64 hmax = rho.pair_int(weight_sub(mu, w0mu));
  int s = d.num_simple();
  std::vector<Weight> out;
  Weight n(s, 0);
  std::function<void(int, i64)> rec = [&](int idx, i64 budget) {
    if (idx == s) {
      Weight nu = mu;
      for (int i = 0; i < s; ++i) nu = weight_sub(nu, weight_scale(n[i], d.simple_roots[i]));
      if (d.is_dominant(nu)) out.push_back(nu);
      return;
    }
    for (i64 v = 0; v <= budget; ++v) {
      n[idx] = v;
      rec(idx + 1, budget - v);
    }
    n[idx] = 0;
  };
  rec(0, hmax);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<Weight, QLaurent> character_image(const BasedRootDatum& d, const Weight& mu) {
  require_split(d);
  if (!d.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");
  ShiftCovector rho = rho_ad(d);
  Weight w0mu = antidominant_conjugate(d, mu);
  std::map<Weight, QLaurent> out;
  for (auto& nu : dominant_below(d, mu)) {
    QLaurent K = kostka_foulkes(d, mu, nu);
    if (K.is_zero()) continue;
    Weight num = antidominant_conjugate(d, nu);
    i64 bound = rho.pair_int(weight_sub(num, w0mu));
    if (K.degree() > bound)
      fail(errc::non_polynomial, "Kostka degree exceeds <rho_ad, lam - w0 mu> at " +
                                     weight_str(nu));
    out[num] = K.reversed((int)bound);
  }
  return out;
}

std::map<Weight, QLaurent> graded_ct_image(const BasedRootDatum& d, const Weight& mu) {
  require_split(d);
  if (!d.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");
  ShiftCovector rho = rho_ad(d);
  Weight w0mu = antidominant_conjugate(d, mu);
  LatticeElem x;
  for (auto& nu : dominant_below(d, mu)) {
    i64 m = freudenthal_multiplicity(d, mu, nu);
    if (m == 0) continue;
    for (auto& lam : w_orbit(d, nu).elements) {
      i64 e = rho.pair_int(weight_sub(lam, w0mu));
      x.add_term(lam, QLaurent::monomial(m, (int)e));
    }
  }
  return expand_in_m_basis(d, rho, x);
}

} // namespace satake
