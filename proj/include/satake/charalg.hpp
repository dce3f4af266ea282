#ifndef SATAKE_CHARALG_HPP
#define SATAKE_CHARALG_HPP

#include <map>
#include <utility>

#include "satake/qpoly.hpp"
#include "satake/weyl.hpp"

namespace satake {

// Finitely supported function X^sigma -> Z[q^{+-}], written sum c_w e^w.
struct LatticeElem {
  std::map<Weight, QLaurent> terms;

  bool is_zero() const { return terms.empty(); }
  QLaurent coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? QLaurent() : it->second;
  }
  void add_term(const Weight& w, const QLaurent& c);
  LatticeElem& operator+=(const LatticeElem& o);
  LatticeElem& operator-=(const LatticeElem& o);
  friend bool operator==(const LatticeElem& a, const LatticeElem& b) { return a.terms == b.terms; }
  std::string str() const;
};

LatticeElem lattice_monomial(const Weight& w, const QLaurent& c = QLaurent(1));
// group-algebra convolution e^a * e^b = e^{a+b}
LatticeElem multiply(const LatticeElem& a, const LatticeElem& b);
LatticeElem scale(const QLaurent& c, const LatticeElem& x);
// substitute a numeric q (all exponents must be >= 0)
LatticeElem eval_q(const LatticeElem& x, i64 q);

// m_{lam} = sum over W_0.lam of q^{<shift, lam' - lam>} e^{lam'},
// lam antidominant sigma-fixed.
LatticeElem m_element(const BasedRootDatum& d, const ShiftCovector& shift, const Weight& lam);

// Coordinates of x in the m-basis; throws not_in_span on nonzero residual.
std::map<Weight, QLaurent> expand_in_m_basis(const BasedRootDatum& d, const ShiftCovector& shift,
                                             const LatticeElem& x);

// Twisted W_0-action w ._shift e^w = q^{<shift, w.v - v>} e^{w.v}, applied
// for a word in folded generators (indices into d.folded_gens). Rational
// level: coefficients may pick up negative powers of q.
LatticeElem twisted_action(const BasedRootDatum& d, const ShiftCovector& shift,
                           const std::vector<int>& word, const LatticeElem& x);

// -- the V_T^ fiber ring --------------------------------------------------

// Monoid algebra of pairs (lam, nu) with nu + lam_- a nonnegative root
// combination and nu + lam in the root lattice.
struct VTElem {
  std::map<std::pair<Weight, Weight>, QLaurent> terms;
  bool is_zero() const { return terms.empty(); }
  void add_term(const Weight& lam, const Weight& nu, const QLaurent& c);
};

VTElem vt_monomial(const BasedRootDatum& d, const Weight& lam, const Weight& nu,
                   const QLaurent& c = QLaurent(1));
VTElem vt_multiply(const BasedRootDatum& d, const VTElem& a, const VTElem& b);
// e1^lam (x) e2^nu -> q^{<shift, nu + lam>} e^{lam}; supported lam must be
// sigma-fixed
LatticeElem vt_embed(const BasedRootDatum& d, const ShiftCovector& shift, const VTElem& a);
// e1^lam (x) e2^nu -> ebar^{nu+lam}; monomials of the positive monoid
// algebra are keyed by their image in the root lattice of X
using PosMonoidElem = std::map<Weight, QLaurent>;
PosMonoidElem vt_section(const BasedRootDatum& d, const VTElem& a);
// ebar^{lam} -> 1 (x) e2^{lam}; ring map on the positive monoid algebra
VTElem vt_grade_pullback(const BasedRootDatum& d, const PosMonoidElem& x);

} // namespace satake

#endif
