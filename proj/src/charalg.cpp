#include "satake/charalg.hpp"

#include <sstream>

namespace satake {

void LatticeElem::add_term(const Weight& w, const QLaurent& c) {
  if (c.is_zero()) return;
  auto& slot = terms[w];
  slot += c;
  if (slot.is_zero()) terms.erase(w);
}

LatticeElem& LatticeElem::operator+=(const LatticeElem& o) {
  for (auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

LatticeElem& LatticeElem::operator-=(const LatticeElem& o) {
  for (auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

std::string LatticeElem::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e" << weight_str(w);
  }
  return os.str();
}

LatticeElem lattice_monomial(const Weight& w, const QLaurent& c) {
  LatticeElem x;
  x.add_term(w, c);
  return x;
}

LatticeElem multiply(const LatticeElem& a, const LatticeElem& b) {
  LatticeElem r;
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) r.add_term(weight_add(wa, wb), ca * cb);
  return r;
}

LatticeElem scale(const QLaurent& c, const LatticeElem& x) {
  LatticeElem r;
  for (auto& [w, v] : x.terms) r.add_term(w, c * v);
  return r;
}

LatticeElem eval_q(const LatticeElem& x, i64 q) {
  LatticeElem r;
  for (auto& [w, v] : x.terms) r.add_term(w, QLaurent(v.eval(q)));
  return r;
}

LatticeElem m_element(const BasedRootDatum& d, const ShiftCovector& shift, const Weight& lam) {
  if (!d.is_sigma_fixed(lam)) fail(errc::not_sigma_fixed, weight_str(lam) + " is not sigma-fixed");
  if (!d.is_antidominant(lam))
    fail(errc::not_antidominant, weight_str(lam) + " is not antidominant");
  LatticeElem x;
  for (auto& v : w0_orbit(d, lam).elements) {
    i64 e = shift.pair_int(weight_sub(v, lam));
    if (e < 0) fail(errc::not_dominant, "shift covector is not dominant");
    x.add_term(v, QLaurent::q_power((int)e));
  }
  return x;
}

std::map<Weight, QLaurent> expand_in_m_basis(const BasedRootDatum& d, const ShiftCovector& shift,
                                             const LatticeElem& x) {
  std::map<Weight, QLaurent> coords;
  LatticeElem residual = x;
  // orbit supports are disjoint, so coordinates can be read off at the
  // antidominant representatives directly
  for (auto& [w, c] : x.terms) {
    if (!d.is_sigma_fixed(w))
      fail(errc::not_sigma_fixed, "support weight " + weight_str(w) + " is not sigma-fixed");
    Weight rep = antidominant_in_fixed(d, w);
    if (!coords.count(rep)) coords[rep] = QLaurent();
  }
  for (auto& [rep, slot] : coords) slot = x.coeff(rep);
  for (auto it = coords.begin(); it != coords.end();) {
    if (it->second.is_zero()) it = coords.erase(it);
    else ++it;
  }
  for (auto& [rep, c] : coords) residual -= scale(c, m_element(d, shift, rep));
  if (!residual.is_zero())
    fail(errc::not_in_span,
         "element is not in the invariant ring; residual " + residual.str());
  return coords;
}

LatticeElem twisted_action(const BasedRootDatum& d, const ShiftCovector& shift,
                           const std::vector<int>& word, const LatticeElem& x) {
  LatticeElem cur = x;
  // apply the word right-to-left, termwise
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int g = *it;
    if (g < 0 || g >= (int)d.folded_gens.size())
      fail(errc::unknown_name, "folded generator index out of range");
    LatticeElem next;
    for (auto& [w, c] : cur.terms) {
      if (!d.is_sigma_fixed(w))
        fail(errc::not_sigma_fixed, "support weight " + weight_str(w) + " is not sigma-fixed");
      Weight wv = mat_apply(d.folded_gens[g], w);
      i64 e = shift.pair_int(weight_sub(wv, w));
      next.add_term(wv, c.shifted((int)e));
    }
    cur = next;
  }
  return cur;
}

// -- V_T^ ring ------------------------------------------------------------

namespace {

void check_vt_pair(const BasedRootDatum& d, const Weight& lam, const Weight& nu) {
  Weight lam_minus = antidominant_conjugate(d, lam);
  auto cone = d.root_lattice_coords(weight_add(nu, lam_minus));
  bool ok = cone.has_value();
  if (ok)
    for (i64 x : *cone) ok = ok && x >= 0;
  if (!ok)
    fail(errc::constraint_violated, "pair (" + weight_str(lam) + ", " + weight_str(nu) +
                                        ") leaves the V_T cone");
  if (!d.in_root_lattice(weight_add(nu, lam)))
    fail(errc::constraint_violated, "nu + lam outside the adjoint character lattice");
}

} // namespace

void VTElem::add_term(const Weight& lam, const Weight& nu, const QLaurent& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(lam, nu);
  auto& slot = terms[key];
  slot += c;
  if (slot.is_zero()) terms.erase(key);
}

VTElem vt_monomial(const BasedRootDatum& d, const Weight& lam, const Weight& nu,
                   const QLaurent& c) {
  check_vt_pair(d, lam, nu);
  VTElem x;
  x.add_term(lam, nu, c);
  return x;
}

VTElem vt_multiply(const BasedRootDatum& d, const VTElem& a, const VTElem& b) {
  VTElem r;
  for (auto& [ka, ca] : a.terms)
    for (auto& [kb, cb] : b.terms) {
      Weight lam = weight_add(ka.first, kb.first);
      Weight nu = weight_add(ka.second, kb.second);
      check_vt_pair(d, lam, nu);
      r.add_term(lam, nu, ca * cb);
    }
  return r;
}

LatticeElem vt_embed(const BasedRootDatum& d, const ShiftCovector& shift, const VTElem& a) {
  LatticeElem r;
  for (auto& [k, c] : a.terms) {
    if (!d.is_sigma_fixed(k.first))
      fail(errc::not_sigma_fixed, "lam component " + weight_str(k.first) + " is not sigma-fixed");
    i64 e = shift.pair_int(weight_add(k.second, k.first));
    r.add_term(k.first, c.shifted((int)e));
  }
  return r;
}

PosMonoidElem vt_section(const BasedRootDatum& d, const VTElem& a) {
  PosMonoidElem r;
  for (auto& [k, c] : a.terms) {
    Weight bar = weight_add(k.second, k.first);
    auto& slot = r[bar];
    slot += c;
    if (slot.is_zero()) r.erase(bar);
  }
  return r;
}

VTElem vt_grade_pullback(const BasedRootDatum& d, const PosMonoidElem& x) {
  VTElem r;
  Weight zero(d.rank, 0);
  for (auto& [bar, c] : x) {
    check_vt_pair(d, zero, bar);
    r.add_term(zero, bar, c);
  }
  return r;
}

} // namespace satake
