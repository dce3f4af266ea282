#include "satake/hecke.hpp"

#include <algorithm>

namespace satake {

std::optional<std::pair<i64, int>> prime_power(i64 q) {
  if (q < 2) return std::nullopt;
  i64 p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q; // q itself is prime
  i64 m = q;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, k);
}

HeckeHandle HeckeHandle::spherical(const BasedRootDatum& d, std::optional<i64> q) {
  if (q && !prime_power(*q))
    fail(errc::not_prime_power, std::to_string(*q) + " is not a prime power");
  return HeckeHandle{d, rho_ad(d), q};
}

HeckeHandle weight_hecke(const HeckeHandle& base, const Weight& lambda) {
  ShiftCovector lam_ad = shift_from_weight(base.datum, lambda); // checks dominance
  return HeckeHandle{base.datum, lam_ad + rho_ad(base.datum), base.q};
}

LatticeElem to_lattice(const HeckeHandle& h, const HeckeElem& a) {
  LatticeElem x;
  for (auto& [lam, c] : a) x += scale(c, m_element(h.datum, h.shift, lam));
  return x;
}

HeckeElem from_lattice(const HeckeHandle& h, const LatticeElem& x) {
  return expand_in_m_basis(h.datum, h.shift, x);
}

HeckeElem hecke_multiply(const HeckeHandle& h, const HeckeElem& a, const HeckeElem& b) {
  return from_lattice(h, multiply(to_lattice(h, a), to_lattice(h, b)));
}

HeckeElem structure_constants(const HeckeHandle& h, const Weight& lam, const Weight& mu) {
  HeckeElem a{{lam, QLaurent(1)}}, b{{mu, QLaurent(1)}};
  return hecke_multiply(h, a, b);
}

std::map<Weight, i64> modp_structure(const HeckeHandle& h, const Weight& lam, const Weight& mu) {
  if (!h.q) fail(errc::mode_mismatch, "modp_structure requires a numeric handle");
  auto pp = prime_power(*h.q);
  if (!pp) fail(errc::not_prime_power, std::to_string(*h.q) + " is not a prime power");
  std::map<Weight, i64> out;
  for (auto& [kappa, c] : structure_constants(h, lam, mu)) {
    i64 v = c.eval_mod(*h.q, pp->first);
    if (v != 0) out[kappa] = v;
  }
  return out;
}

void scaling_compare(const HeckeHandle& h1, const HeckeHandle& h2, const Weight& lam,
                     const Weight& mu) {
  ShiftCovector s;
  s.values.resize(h1.datum.rank);
  for (int k = 0; k < h1.datum.rank; ++k)
    s.values[k] = h2.shift.values[k] - h1.shift.values[k];
  HeckeElem c1 = structure_constants(h1, lam, mu);
  HeckeElem c2 = structure_constants(h2, lam, mu);
  Weight total = weight_add(lam, mu);
  std::vector<Weight> keys;
  for (auto& [k, v] : c1) keys.push_back(k);
  for (auto& [k, v] : c2)
    if (!c1.count(k)) keys.push_back(k);
  // with antidominant basis labels the rescaling e^v -> q^{<s,v>} e^v gives
  // c2_k = q^{<s, k - (lam+mu)>} c1_k, a nonnegative exponent on occurring k
  for (auto& kappa : keys) {
    i64 e = s.pair_int(weight_sub(kappa, total));
    QLaurent lhs = c2.count(kappa) ? c2.at(kappa) : QLaurent();
    QLaurent rhs = (c1.count(kappa) ? c1.at(kappa) : QLaurent()).shifted((int)e);
    if (lhs != rhs)
      fail(errc::mismatch, "scaling identity fails at kappa = " + weight_str(kappa) + ": " +
                               lhs.str() + " vs " + rhs.str());
    if (lhs.has_negative_exponent())
      fail(errc::mismatch, "scaled table leaves Z[q] at kappa = " + weight_str(kappa));
  }
}

namespace {

void require_split(const BasedRootDatum& d) {
  if (!d.sigma_is_identity())
    fail(errc::sigma_nontrivial,
         "double-coset coordinates need the split case; twisted data has the m-basis only");
}

HeckeElem dc_basis_rec(const HeckeHandle& h, const Weight& mu, std::map<Weight, HeckeElem>& memo) {
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  // CT of the IC trace function, minus its lower double-coset pieces
  HeckeElem acc = graded_ct_image(h.datum, mu);
  auto avals = character_image(h.datum, mu);
  for (auto& nu : dominant_below(h.datum, mu)) {
    if (nu == mu) continue;
    Weight num = antidominant_conjugate(h.datum, nu);
    auto av = avals.find(num);
    if (av == avals.end() || av->second.is_zero()) continue;
    HeckeElem lower = dc_basis_rec(h, nu, memo);
    for (auto& [key, c] : lower) {
      auto& slot = acc[key];
      slot -= av->second * c;
      if (slot.is_zero()) acc.erase(key);
    }
  }
  memo.emplace(mu, acc);
  return acc;
}

} // namespace

HeckeElem double_coset_basis(const HeckeHandle& h, const Weight& mu) {
  require_split(h.datum);
  if (!h.datum.is_dominant(mu)) fail(errc::not_dominant, "mu must be dominant");
  if (!(h.shift == rho_ad(h.datum)))
    fail(errc::mode_mismatch, "double-coset coordinates are defined for the rho_ad shift");
  std::map<Weight, HeckeElem> memo;
  return dc_basis_rec(h, mu, memo);
}

HeckeElem dc_coordinates(const HeckeHandle& h, const HeckeElem& m_coords) {
  require_split(h.datum);
  HeckeElem residual = m_coords;
  HeckeElem out;
  std::map<Weight, HeckeElem> memo;
  while (!residual.empty()) {
    // take a key maximal in dominance order among the remaining support
    Weight pick;
    bool found = false;
    for (auto& [key, c] : residual) {
      Weight dom = dominant_conjugate(h.datum, key);
      bool maximal = true;
      for (auto& [other, c2] : residual) {
        if (other == key) continue;
        Weight dom2 = dominant_conjugate(h.datum, other);
        if (dom2 != dom && dominance_leq(h.datum, dom, dom2)) maximal = false;
      }
      if (maximal) {
        pick = key;
        found = true;
        break;
      }
    }
    if (!found) fail(errc::not_in_span, "no dominance-maximal key in dc expansion");
    Weight mu = dominant_conjugate(h.datum, pick);
    QLaurent c = residual[pick];
    out[mu] = c;
    HeckeElem dc = dc_basis_rec(h, mu, memo);
    for (auto& [key, v] : dc) {
      auto& slot = residual[key];
      slot -= c * v;
      if (slot.is_zero()) residual.erase(key);
    }
  }
  return out;
}

} // namespace satake
