#include "satake/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "satake/hecke.hpp"

namespace satake {

// -- finite field ----------------------------------------------------------

namespace {

// multiply polynomials over F_p modulo a monic modulus of degree k
int poly_mulmod(i64 p, int k, const std::vector<int>& mod, int a, int b) {
  std::vector<int> prod(2 * k - 1, 0);
  std::vector<int> da(k), db(k);
  for (int i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= (int)p;
    db[i] = b % p;
    b /= (int)p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (int)((prod[i + j] + (i64)da[i] * db[j]) % p);
  for (int d = 2 * k - 2; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = (int)(((prod[d - k + i] - (i64)c * mod[i]) % p + p) % p);
  }
  int r = 0;
  for (int i = k - 1; i >= 0; --i) r = r * (int)p + prod[i];
  return r;
}

} // namespace

GaloisField::GaloisField(i64 q) : q_(q) {
  auto pp = prime_power(q);
  if (!pp) fail(errc::not_prime_power, std::to_string(q) + " is not a prime power");
  p_ = pp->first;
  k_ = pp->second;
  if (k_ > 4) fail(errc::envelope_exceeded, "field degree above 4");

  add_.assign((size_t)(q_ * q_), 0);
  mul_.assign((size_t)(q_ * q_), 0);
  neg_.assign((size_t)q_, 0);
  inv_.assign((size_t)q_, 0);

  // addition is componentwise mod p in base-p digits
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      int r = 0, pw = 1, x = a, y = b;
      for (int i = 0; i < k_; ++i) {
        r += (int)(((x % p_) + (y % p_)) % p_) * pw;
        x /= (int)p_;
        y /= (int)p_;
        pw *= (int)p_;
      }
      add_[(size_t)(a * q_ + b)] = r;
    }
  for (int a = 0; a < q_; ++a) {
    int r = 0, pw = 1, x = a;
    for (int i = 0; i < k_; ++i) {
      r += (int)((p_ - x % p_) % p_) * pw;
      x /= (int)p_;
      pw *= (int)p_;
    }
    neg_[(size_t)a] = r;
  }

  // find a monic modulus of degree k that makes the ring a field
  i64 count = 1;
  for (int i = 0; i < k_; ++i) count *= p_;
  for (i64 modidx = 0; modidx < count; ++modidx) {
    std::vector<int> mod(k_);
    i64 m = modidx;
    for (int i = 0; i < k_; ++i) {
      mod[i] = (int)(m % p_);
      m /= p_;
    }
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        mul_[(size_t)(a * q_ + b)] = poly_mulmod(p_, k_, mod, a, b);
    bool field = true;
    for (int a = 1; a < q_ && field; ++a) {
      int found = 0;
      for (int b = 1; b < q_; ++b)
        if (mul_[(size_t)(a * q_ + b)] == 1) found = b;
      if (found == 0) field = false;
      else inv_[(size_t)a] = found;
    }
    if (field) return;
  }
  fail(errc::not_prime_power, "no field structure found"); // unreachable for prime powers
}

int GaloisField::inv(int a) const {
  if (a == 0) fail(errc::singular, "inverse of zero");
  return inv_[(size_t)a];
}

// -- truncated series ------------------------------------------------------

TruncSeries TruncSeries::zero(const GaloisField& F, int prec) {
  TruncSeries s;
  s.F = &F;
  s.lo = 0;
  s.prec = prec;
  return s;
}

TruncSeries TruncSeries::t_power(const GaloisField& F, int e, int prec, int coeff) {
  TruncSeries s;
  s.F = &F;
  s.lo = e;
  s.prec = prec;
  if (coeff != 0 && e < prec) s.c = {coeff};
  return s;
}

int TruncSeries::coeff_at(int e) const {
  if (e >= prec) fail(errc::precision_exhausted, "coefficient beyond known precision");
  if (e < lo || e >= lo + (int)c.size()) return 0;
  return c[(size_t)(e - lo)];
}

bool TruncSeries::known_zero() const {
  for (int x : c)
    if (x != 0) return false;
  return true;
}

int TruncSeries::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return lo + (int)i;
  fail(errc::precision_exhausted, "series indistinguishable from zero");
}

void TruncSeries::trim() {
  size_t b = 0;
  while (b < c.size() && c[b] == 0) ++b;
  size_t e = c.size();
  while (e > b && c[e - 1] == 0) --e;
  if (b > 0 || e < c.size()) {
    c = std::vector<int>(c.begin() + (long)b, c.begin() + (long)e);
    lo += (int)b;
  }
  if ((int)c.size() > prec - lo) c.resize((size_t)std::max(0, prec - lo));
}

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r;
  r.F = a.F;
  r.prec = std::min(a.prec, b.prec);
  r.lo = std::min(a.lo, b.lo);
  int hi = std::min(r.prec, std::max(a.lo + (int)a.c.size(), b.lo + (int)b.c.size()));
  if (hi > r.lo) {
    r.c.assign((size_t)(hi - r.lo), 0);
    for (int e = r.lo; e < hi; ++e) {
      int x = (e < a.prec) ? a.coeff_at(e) : 0;
      int y = (e < b.prec) ? b.coeff_at(e) : 0;
      r.c[(size_t)(e - r.lo)] = a.F->add(x, y);
    }
  }
  r.trim();
  return r;
}

TruncSeries ts_neg(const TruncSeries& a) {
  TruncSeries r = a;
  for (auto& x : r.c) x = a.F->neg(x);
  return r;
}

TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b) { return ts_add(a, ts_neg(b)); }

TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r;
  r.F = a.F;
  r.prec = std::min(a.lo + b.prec, b.lo + a.prec);
  r.lo = a.lo + b.lo;
  int hi = std::min(r.prec, a.lo + (int)a.c.size() + b.lo + (int)b.c.size() - 1);
  if (a.c.empty() || b.c.empty()) hi = r.lo;
  if (hi > r.lo) {
    r.c.assign((size_t)(hi - r.lo), 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j) {
        int e = a.lo + (int)i + b.lo + (int)j;
        if (e >= hi) break;
        size_t k = (size_t)(e - r.lo);
        r.c[k] = a.F->add(r.c[k], a.F->mul(a.c[i], b.c[j]));
      }
    }
  }
  r.trim();
  return r;
}

TruncSeries ts_div(const TruncSeries& a, const TruncSeries& b) {
  int v = b.valuation();
  int ulen = b.prec - v;
  // reciprocal of the unit part u = t^{-v} b, known to ulen terms
  std::vector<int> u((size_t)ulen, 0);
  for (int e = 0; e < ulen; ++e) u[(size_t)e] = b.coeff_at(v + e);
  const GaloisField& F = *b.F;
  std::vector<int> rc((size_t)ulen, 0);
  int u0i = F.inv(u[0]);
  rc[0] = u0i;
  for (int m = 1; m < ulen; ++m) {
    int s = 0;
    for (int j = 1; j <= m; ++j) s = F.add(s, F.mul(u[(size_t)j], rc[(size_t)(m - j)]));
    rc[(size_t)m] = F.neg(F.mul(u0i, s));
  }
  TruncSeries recip;
  recip.F = &F;
  recip.lo = 0;
  recip.prec = ulen;
  recip.c = rc;
  TruncSeries r = ts_mul(a, recip);
  r.lo -= v;
  r.prec -= v;
  return r;
}

// -- matrices and elementary divisors --------------------------------------

OracleMatrix mat_mul(const OracleMatrix& A, const OracleMatrix& B) {
  OracleMatrix R;
  R.n = A.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      TruncSeries s = ts_mul(A.at(i, 0), B.at(0, j));
      for (int k = 1; k < A.n; ++k) s = ts_add(s, ts_mul(A.at(i, k), B.at(k, j)));
      R.a.push_back(s);
    }
  return R;
}

std::vector<i64> smith_valuations(OracleMatrix m) {
  std::vector<i64> vals;
  while (m.n > 0) {
    // minimal-valuation pivot; a known-zero entry is only safely ignorable
    // when its precision exceeds the chosen pivot valuation
    int pi = -1, pj = -1, pv = 0;
    int min_zero_prec = 1 << 30;
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        const TruncSeries& e = m.at(i, j);
        if (e.known_zero()) {
          min_zero_prec = std::min(min_zero_prec, e.prec);
          continue;
        }
        int v = e.valuation();
        if (pi < 0 || v < pv) {
          pi = i;
          pj = j;
          pv = v;
        }
      }
    if (pi < 0 || pv >= min_zero_prec)
      fail(errc::precision_exhausted, "pivot valuation not certified at current precision");
    vals.push_back(pv);
    if (pi != 0)
      for (int j = 0; j < m.n; ++j) std::swap(m.at(0, j), m.at(pi, j));
    if (pj != 0)
      for (int i = 0; i < m.n; ++i) std::swap(m.at(i, 0), m.at(i, pj));
    // clear the pivot column; the pivot row only feeds back into row 0,
    // so the trailing block already carries the remaining divisors
    for (int i = 1; i < m.n; ++i) {
      if (m.at(i, 0).known_zero()) continue;
      TruncSeries f = ts_div(m.at(i, 0), m.at(0, 0));
      for (int j = 1; j < m.n; ++j)
        m.at(i, j) = ts_sub(m.at(i, j), ts_mul(f, m.at(0, j)));
    }
    OracleMatrix sub;
    sub.n = m.n - 1;
    for (int i = 1; i < m.n; ++i)
      for (int j = 1; j < m.n; ++j) sub.a.push_back(m.at(i, j));
    m = sub;
  }
  std::sort(vals.begin(), vals.end(), std::greater<i64>());
  return vals;
}

// -- double-coset counting -------------------------------------------------

namespace {

void check_envelope(int n, i64 q, const std::vector<const Weight*>& ws,
                    const OracleOptions& opts) {
  if (n < 1 || n > opts.max_n)
    fail(errc::envelope_exceeded, "oracle supports n <= " + std::to_string(opts.max_n));
  if (q < 2 || q > opts.max_q)
    fail(errc::envelope_exceeded, "oracle supports q <= " + std::to_string(opts.max_q));
  if (!prime_power(q)) fail(errc::not_prime_power, std::to_string(q) + " is not a prime power");
  for (auto* w : ws) {
    if ((int)w->size() != n) fail(errc::parse_error, "weight length does not match n");
    i64 mx = *std::max_element(w->begin(), w->end());
    i64 mn = *std::min_element(w->begin(), w->end());
    if (mx - mn > opts.max_spread)
      fail(errc::envelope_exceeded,
           "oracle supports spread <= " + std::to_string(opts.max_spread));
  }
}

i64 wsum(const Weight& w) { return std::accumulate(w.begin(), w.end(), (i64)0); }

std::vector<i64> sorted_desc(const Weight& w) {
  std::vector<i64> s(w.begin(), w.end());
  std::sort(s.begin(), s.end(), std::greater<i64>());
  return s;
}

int base_precision(const Weight& a, const Weight& b) {
  i64 s = 4;
  for (i64 x : a) s += std::abs(x);
  for (i64 x : b) s += std::abs(x);
  return (int)s;
}

template <class Fn>
i64 with_precision_retry(int prec0, int cap, Fn&& body) {
  int prec = std::min(prec0, cap);
  for (;;) {
    try {
      return body(prec);
    } catch (const satake_error& e) {
      if (e.code() != errc::precision_exhausted || prec >= cap) throw;
      prec = std::min(2 * prec, cap);
    }
  }
}

// # of u in U(F)/U(O) with lam(t) u in K mu(t) K, at fixed series precision
i64 count_at_precision(const GaloisField& F, int n, const Weight& mu, const Weight& lam,
                       int prec) {
  i64 mu_min = *std::min_element(mu.begin(), mu.end());
  // every entry of K mu(t) K has valuation >= mu_min
  for (i64 l : lam)
    if (l < mu_min) return 0;
  std::vector<i64> target = sorted_desc(mu);

  // principal parts of the strict upper triangle parametrize U(F)/U(O);
  // coefficients of t^{-1},...,t^{-k_ij} with k_ij bounded by the entry
  // valuation constraint val(t^{lam_i} u_ij) >= mu_min
  struct Slot {
    int i, j, k;
  };
  std::vector<Slot> slots;
  i64 dim = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int k = (int)std::max<i64>(0, lam[(size_t)i] - mu_min);
      slots.push_back({i, j, k});
      dim += k;
    }
  i64 q = F.q();
  std::vector<int> digits((size_t)dim, 0);

  i64 count = 0;
  for (;;) {
    OracleMatrix M;
    M.n = n;
    M.a.assign((size_t)(n * n), TruncSeries::zero(F, prec));
    for (int i = 0; i < n; ++i)
      M.at(i, i) = TruncSeries::t_power(F, (int)lam[(size_t)i], prec);
    size_t pos = 0;
    for (auto& s : slots) {
      TruncSeries e = TruncSeries::zero(F, prec);
      for (int v = 1; v <= s.k; ++v) {
        int cv = digits[pos++];
        if (cv != 0)
          e = ts_add(e, TruncSeries::t_power(F, (int)lam[(size_t)s.i] - v, prec, cv));
      }
      M.at(s.i, s.j) = e;
    }
    if (smith_valuations(M) == target) ++count;

    // odometer over F_q^dim
    size_t d = 0;
    while (d < digits.size()) {
      if (++digits[d] < q) break;
      digits[d++] = 0;
    }
    if (d == digits.size()) break;
  }
  return count;
}

i64 count_with_retry(const GaloisField& F, int n, const Weight& mu, const Weight& lam,
                     const OracleOptions& opts) {
  if (wsum(mu) != wsum(lam)) return 0;
  return with_precision_retry(base_precision(mu, lam), opts.precision_cap,
                              [&](int prec) { return count_at_precision(F, n, mu, lam, prec); });
}

} // namespace

i64 satake_count(int n, i64 q, const Weight& mu, const Weight& lam, const OracleOptions& opts) {
  check_envelope(n, q, {&mu, &lam}, opts);
  GaloisField F(q);
  return count_with_retry(F, n, mu, lam, opts);
}

LatticeElem satake_vector(int n, i64 q, const Weight& mu, const OracleOptions& opts) {
  check_envelope(n, q, {&mu}, opts);
  i64 mu_min = *std::min_element(mu.begin(), mu.end());
  i64 mu_max = *std::max_element(mu.begin(), mu.end());
  i64 total = wsum(mu);
  std::vector<i64> mu_desc = sorted_desc(mu);
  GaloisField F(q);

  LatticeElem out;
  Weight lam((size_t)n, 0);
  std::function<void(int, i64)> rec = [&](int idx, i64 rem) {
    if (idx == n) {
      if (rem != 0) return;
      i64 c = count_with_retry(F, n, mu, lam, opts);
      if (c == 0) return;
      // dominance check for GL_n: partial sums of the sorted entries
      std::vector<i64> lam_desc = sorted_desc(lam);
      i64 pa = 0, pb = 0;
      for (int k = 0; k < n; ++k) {
        pa += lam_desc[(size_t)k];
        pb += mu_desc[(size_t)k];
        if (pa > pb)
          fail(errc::support_violation,
               "nonzero count outside the dominance cone at " + weight_str(lam));
      }
      for (i64 x : lam)
        if (x < mu_min || x > mu_max)
          fail(errc::support_violation,
               "nonzero count outside the coordinate box at " + weight_str(lam));
      out.add_term(lam, QLaurent(c));
      return;
    }
    for (i64 v = mu_min - 1; v <= mu_max + 1; ++v) {
      lam[(size_t)idx] = v;
      rec(idx + 1, rem - v);
    }
  };
  rec(0, total);
  return out;
}

namespace {

// left cosets hK of K mu(t) K for GL_2, as Hermite forms [[t^a, c], [0, t^b]]
i64 convolve_at_precision(const GaloisField& F, const Weight& mu, const Weight& nu,
                          const Weight& kappa, int prec) {
  std::vector<i64> mu_t = sorted_desc(mu), nu_t = sorted_desc(nu);
  i64 mu_min = std::min(mu[0], mu[1]);
  i64 total = wsum(mu);
  i64 q = F.q();
  i64 count = 0;
  for (i64 a = mu_min; a + mu_min <= total; ++a) {
    i64 b = total - a;
    // column operations reduce the (0,1) entry modulo the (0,0) pivot t^a,
    // and membership in K mu(t) K bounds its valuation below by mu_min
    int clen = (int)(a - mu_min); // c = sum_{e=mu_min}^{a-1} c_e t^e
    i64 ncands = 1;
    for (int i = 0; i < clen; ++i) ncands *= q;
    for (i64 ci = 0; ci < ncands; ++ci) {
      std::vector<int> cd((size_t)std::max(clen, 0), 0);
      i64 m = ci;
      for (int i = 0; i < clen; ++i) {
        cd[(size_t)i] = (int)(m % q);
        m /= q;
      }
      // h = [[t^a, c], [0, t^b]] must lie in K mu(t) K
      OracleMatrix H;
      H.n = 2;
      H.a.assign(4, TruncSeries::zero(F, prec));
      H.at(0, 0) = TruncSeries::t_power(F, (int)a, prec);
      H.at(1, 1) = TruncSeries::t_power(F, (int)b, prec);
      TruncSeries c01 = TruncSeries::zero(F, prec);
      for (int i = 0; i < clen; ++i)
        if (cd[(size_t)i] != 0)
          c01 = ts_add(c01, TruncSeries::t_power(F, (int)(mu_min + i), prec, cd[(size_t)i]));
      H.at(0, 1) = c01;
      if (smith_valuations(H) != mu_t) continue;
      // h^{-1} kappa(t) = [[t^{k1-a}, -c t^{k2-a-b}], [0, t^{k2-b}]]
      OracleMatrix G;
      G.n = 2;
      G.a.assign(4, TruncSeries::zero(F, prec));
      G.at(0, 0) = TruncSeries::t_power(F, (int)(kappa[0] - a), prec);
      G.at(1, 1) = TruncSeries::t_power(F, (int)(kappa[1] - b), prec);
      TruncSeries shift = TruncSeries::t_power(F, (int)(kappa[1] - a - b), prec);
      G.at(0, 1) = ts_neg(ts_mul(c01, shift));
      if (smith_valuations(G) == nu_t) ++count;
    }
  }
  return count;
}

} // namespace

i64 convolve_count(i64 q, const Weight& mu, const Weight& nu, const Weight& kappa,
                   const OracleOptions& opts) {
  check_envelope(2, q, {&mu, &nu}, opts);
  if (kappa.size() != 2) fail(errc::parse_error, "weight length does not match n");
  if (wsum(kappa) != wsum(mu) + wsum(nu)) return 0;
  GaloisField F(q);
  int prec0 = base_precision(mu, nu) + base_precision(kappa, {});
  return with_precision_retry(prec0, opts.precision_cap, [&](int prec) {
    return convolve_at_precision(F, mu, nu, kappa, prec);
  });
}

std::vector<std::pair<Weight, i64>> convolve_table(i64 q, const Weight& mu, const Weight& nu,
                                                   const OracleOptions& opts) {
  check_envelope(2, q, {&mu, &nu}, opts);
  i64 total = wsum(mu) + wsum(nu);
  i64 lo = std::min(mu[0], mu[1]) + std::min(nu[0], nu[1]);
  i64 hi = std::max(mu[0], mu[1]) + std::max(nu[0], nu[1]);
  std::vector<std::pair<Weight, i64>> out;
  for (i64 k1 = lo; k1 <= hi; ++k1) {
    i64 k2 = total - k1;
    if (k1 < k2 || k2 < lo || k2 > hi) continue; // dominant: k1 >= k2
    Weight kappa{k1, k2};
    i64 c = convolve_count(q, mu, nu, kappa, opts);
    if (c != 0) out.emplace_back(kappa, c);
  }
  return out;
}

} // namespace satake
