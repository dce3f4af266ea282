#ifndef SATAKE_QPOLY_HPP
#define SATAKE_QPOLY_HPP

#include <map>
#include <string>

#include "satake/rational.hpp"

namespace satake {

// Integer Laurent polynomial in the formal symbol q. Canonical form: no
// zero coefficients stored.
class QLaurent {
public:
  QLaurent() = default;
  explicit QLaurent(i64 constant) {
    if (constant != 0) c_[0] = constant;
  }
  static QLaurent monomial(i64 coeff, int exp) {
    QLaurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }
  static QLaurent q_power(int exp) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

  // lowest / highest exponent; only valid on nonzero polynomials
  int valuation() const;
  int degree() const;

  i64 coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  const std::map<int, i64>& terms() const { return c_; }

  bool has_negative_exponent() const { return !c_.empty() && c_.begin()->first < 0; }
  bool coeffs_nonnegative() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { a += b; return a; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { a -= b; return a; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  QLaurent shifted(int exp) const;          // multiply by q^exp
  QLaurent reversed(int top) const;          // q^top * p(1/q); requires degree() <= top
  i64 eval(i64 q) const;                     // requires valuation() >= 0 (or q | exactly)
  i64 eval_mod(i64 q, i64 m) const;          // evaluation reduced mod m, nonneg exponents only

  // canonical printing: "0", "1+2*q^3", "q^-1-q"
  std::string str() const;

private:
  std::map<int, i64> c_;
};

} // namespace satake

#endif
