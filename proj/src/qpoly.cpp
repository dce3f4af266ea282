#include "satake/qpoly.hpp"

#include <sstream>

namespace satake {

int QLaurent::valuation() const {
  if (c_.empty()) fail(errc::singular, "valuation of zero polynomial");
  return c_.begin()->first;
}

int QLaurent::degree() const {
  if (c_.empty()) fail(errc::singular, "degree of zero polynomial");
  return c_.rbegin()->first;
}

bool QLaurent::coeffs_nonnegative() const {
  for (auto& [e, v] : c_)
    if (v < 0) return false;
  return true;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (auto& [e, v] : o.c_) {
    i64 nv = (c_[e] += v);
    if (nv == 0) c_.erase(e);
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (auto& [e, v] : o.c_) {
    i64 nv = (c_[e] -= v);
    if (nv == 0) c_.erase(e);
  }
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (auto& [ea, va] : a.c_)
    for (auto& [eb, vb] : b.c_) {
      i64 nv = (r.c_[ea + eb] += va * vb);
      if (nv == 0) r.c_.erase(ea + eb);
    }
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

QLaurent QLaurent::shifted(int exp) const {
  QLaurent r;
  for (auto& [e, v] : c_) r.c_[e + exp] = v;
  return r;
}

QLaurent QLaurent::reversed(int top) const {
  if (!c_.empty() && degree() > top)
    fail(errc::non_polynomial, "reversal bound " + std::to_string(top) + " below degree " +
                                   std::to_string(degree()));
  QLaurent r;
  for (auto& [e, v] : c_) r.c_[top - e] = v;
  return r;
}

i64 QLaurent::eval(i64 q) const {
  i64 s = 0;
  for (auto& [e, v] : c_) {
    if (e < 0) fail(errc::non_polynomial, "evaluating Laurent polynomial with negative exponent");
    i64 pw = 1;
    for (int i = 0; i < e; ++i) pw *= q;
    s += v * pw;
  }
  return s;
}

i64 QLaurent::eval_mod(i64 q, i64 m) const {
  i64 s = 0;
  for (auto& [e, v] : c_) {
    if (e < 0) fail(errc::non_polynomial, "evaluating Laurent polynomial with negative exponent");
    i64 pw = 1;
    for (int i = 0; i < e; ++i) pw = (pw * (q % m)) % m;
    s = (s + v % m * pw) % m;
  }
  return ((s % m) + m) % m;
}

std::string QLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c_) {
    i64 a = v;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace satake
