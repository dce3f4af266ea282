#ifndef SATAKE_RATIONAL_HPP
#define SATAKE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "satake/error.hpp"

namespace satake {

using i64 = long long;

// Exact rational on int64. The matrices here are tiny (rank <= 8), so no
// bignum is needed; overflow would require pairings far outside the
// supported envelope.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(errc::singular, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) fail(errc::singular, "rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  bool positive() const { return num > 0; }
  bool negative() const { return num < 0; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

using Weight = std::vector<i64>;
using IntMat = std::vector<std::vector<i64>>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

// -- small exact linear algebra ------------------------------------------

// One solution of A x = b (free variables set to 0), or nullopt if
// inconsistent. A is m x n.
std::optional<RatVec> solve_linear(RatMat A, RatVec b);

Rat rat_det(RatMat A);

// Basis of the integer kernel {v : M v = 0}; the kernel of an integer
// matrix is automatically saturated.
std::vector<Weight> integer_kernel(const IntMat& M);

IntMat mat_mul(const IntMat& A, const IntMat& B);
Weight mat_apply(const IntMat& M, const Weight& v);
IntMat mat_identity(int n);
bool mat_equal(const IntMat& A, const IntMat& B);
i64 mat_det(const IntMat& A);

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Weight weight_neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline Weight weight_scale(i64 c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline bool weight_is_zero(const Weight& a) {
  for (i64 x : a) if (x != 0) return false;
  return true;
}
inline i64 dot(const Weight& covector, const Weight& v) {
  i64 s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += covector[i] * v[i];
  return s;
}
inline i64 l1_norm(const Weight& a) {
  i64 s = 0;
  for (i64 x : a) s += x < 0 ? -x : x;
  return s;
}
std::string weight_str(const Weight& w);

} // namespace satake

#endif
