#ifndef SATAKE_ORACLE_HPP
#define SATAKE_ORACLE_HPP

#include <memory>
#include <vector>

#include "satake/charalg.hpp"

namespace satake {

// F_q arithmetic via precomputed tables; q = p^k with k <= 4 (the oracle
// envelope only needs q <= 5).
class GaloisField {
public:
  explicit GaloisField(i64 q);
  i64 q() const { return q_; }
  i64 p() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

private:
  i64 q_ = 0, p_ = 0;
  int k_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Truncated Laurent series over F_q: coefficients known for exponents
// < prec; exact (polynomial) inputs carry a large prec.
struct TruncSeries {
  const GaloisField* F = nullptr;
  int lo = 0;             // coefficient offset: c[i] is the t^{lo+i} coefficient
  int prec = 0;           // coefficients valid for exponents < prec
  std::vector<int> c;

  static TruncSeries zero(const GaloisField& F, int prec);
  static TruncSeries t_power(const GaloisField& F, int e, int prec, int coeff = 1);

  int coeff_at(int e) const;
  bool known_zero() const; // all known coefficients vanish
  // valuation; throws precision_exhausted if not determined
  int valuation() const;
  void trim();
};

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries ts_neg(const TruncSeries& a);
// a / b; b must have determinable valuation
TruncSeries ts_div(const TruncSeries& a, const TruncSeries& b);

// n x n matrix over F_q((t)), row major
struct OracleMatrix {
  int n = 0;
  std::vector<TruncSeries> a;
  TruncSeries& at(int i, int j) { return a[i * n + j]; }
  const TruncSeries& at(int i, int j) const { return a[i * n + j]; }
};

OracleMatrix mat_mul(const OracleMatrix& A, const OracleMatrix& B);

// Elementary divisor valuations (sorted decreasing = dominant), by
// pivoting on minimal-valuation entries.
std::vector<i64> smith_valuations(OracleMatrix m);

struct OracleOptions {
  int max_n = 3;
  i64 max_q = 5;
  i64 max_spread = 4;
  int precision_cap = 256;
};

// # of unipotent classes u in U(F)/U(O) with lam(t) u in K mu(t) K
i64 satake_count(int n, i64 q, const Weight& mu, const Weight& lam,
                 const OracleOptions& opts = {});

// CT(1_{K mu(t) K}) as an element of the lattice algebra at numeric q
LatticeElem satake_vector(int n, i64 q, const Weight& mu, const OracleOptions& opts = {});

// # of cosets hK in K mu(t) K with h^{-1} kappa(t) in K nu(t) K  (n = 2)
i64 convolve_count(i64 q, const Weight& mu, const Weight& nu, const Weight& kappa,
                   const OracleOptions& opts = {});

// dominant kappa with nonzero convolution structure constant, with counts
std::vector<std::pair<Weight, i64>> convolve_table(i64 q, const Weight& mu, const Weight& nu,
                                                   const OracleOptions& opts = {});

} // namespace satake

#endif
