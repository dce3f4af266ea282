#include <doctest.h>

#include <random>

#include "satake/charalg.hpp"
#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("qlaurent printing and arithmetic") {
  QLaurent p = QLaurent(1) + QLaurent::monomial(2, 3);
  CHECK(p.str() == "1+2*q^3");
  CHECK((QLaurent::q_power(-1) - QLaurent::q_power(1)).str() == "q^-1-q");
  CHECK(QLaurent().str() == "0");
  CHECK((p * p).str() == "1+4*q^3+4*q^6");
  CHECK(p.eval(2) == 17);
  CHECK(p.eval_mod(2, 2) == 1);
  CHECK(p.reversed(3).str() == "2+q^3");
  CHECK_THROWS_AS(p.reversed(2), satake_error);
  CHECK(p.coeffs_nonnegative());
  CHECK(!(QLaurent(1) - QLaurent::q_power(1)).coeffs_nonnegative());
}

TEST_CASE("m-element examples") {
  BasedRootDatum d = catalog("GL2");
  ShiftCovector rho = rho_ad(d);
  LatticeElem m = m_element(d, rho, {0, 1});
  CHECK(m.coeff({0, 1}) == QLaurent(1));
  CHECK(m.coeff({1, 0}) == QLaurent::q_power(1));
  CHECK(m.terms.size() == 2);

  // central weight: single term
  CHECK(m_element(d, rho, {1, 1}).terms.size() == 1);

  // weight-module shift: exponent 2 on the far element
  ShiftCovector s = shift_from_weight(d, {1, 0}) + rho;
  LatticeElem mv = m_element(d, s, {0, 1});
  CHECK(mv.coeff({1, 0}) == QLaurent::q_power(2));
}

TEST_CASE("m-element error cases") {
  BasedRootDatum d = catalog("GL2");
  ShiftCovector rho = rho_ad(d);
  CHECK_THROWS_AS(m_element(d, rho, {1, 0}), satake_error); // not antidominant
  BasedRootDatum u = catalog("U3");
  CHECK_THROWS_AS(m_element(u, rho_ad(u), {0, 0, 1}), satake_error); // not fixed
}

TEST_CASE("expansion round trip") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<i64> coeff(-3, 3);
  std::uniform_int_distribution<int> expn(0, 2);
  for (auto name : {"GL3", "Sp4", "U3"}) {
    BasedRootDatum d = catalog(name);
    ShiftCovector rho = rho_ad(d);
    auto basis = antidominant_fixed_weights(d, 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::map<Weight, QLaurent> coords;
      LatticeElem x;
      for (auto& lam : basis) {
        QLaurent c = QLaurent::monomial(coeff(rng), expn(rng));
        if (c.is_zero()) continue;
        coords[lam] = c;
        x += scale(c, m_element(d, rho, lam));
      }
      CHECK(expand_in_m_basis(d, rho, x) == coords);
    }
  }
}

TEST_CASE("expansion rejects non-invariant elements") {
  BasedRootDatum d = catalog("GL2");
  CHECK_THROWS_AS(expand_in_m_basis(d, rho_ad(d), lattice_monomial({0, 1})), satake_error);
}

TEST_CASE("twisted action fixes m-elements and composes") {
  std::mt19937 rng(99);
  for (auto name : {"GL3", "U3", "GL2xGL2"}) {
    BasedRootDatum d = catalog(name);
    ShiftCovector rho = rho_ad(d);
    int ng = (int)d.folded_gens.size();
    REQUIRE(ng >= 1);
    std::uniform_int_distribution<int> gen(0, ng - 1);
    for (auto& lam : antidominant_fixed_weights(d, 3)) {
      LatticeElem m = m_element(d, rho, lam);
      for (int g = 0; g < ng; ++g) CHECK(twisted_action(d, rho, {g}, m) == m);
      // action axiom on a non-invariant element
      LatticeElem x = lattice_monomial(lam);
      std::vector<int> w1{gen(rng), gen(rng)}, w2{gen(rng)};
      std::vector<int> w12 = w1;
      w12.insert(w12.end(), w2.begin(), w2.end());
      LatticeElem lhs = twisted_action(d, rho, w12, x);
      LatticeElem rhs = twisted_action(d, rho, w1, twisted_action(d, rho, w2, x));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("fiber ring constraints") {
  BasedRootDatum d = catalog("GL2");
  // (lam, nu) with nu + lam_- a nonnegative root combination
  CHECK_NOTHROW(vt_monomial(d, {0, 1}, {1, -2}));
  CHECK_THROWS_AS(vt_monomial(d, {0, 1}, {-1, 0}), satake_error); // negative combination
  CHECK_THROWS_AS(vt_monomial(d, {0, 0}, {1, 0}), satake_error);  // outside root lattice
}

TEST_CASE("fiber ring embedding and section") {
  BasedRootDatum d = catalog("GL2");
  ShiftCovector rho = rho_ad(d);
  VTElem a = vt_monomial(d, {1, 1}, {0, -2});
  LatticeElem e = vt_embed(d, rho, a);
  CHECK(e.coeff({1, 1}) == QLaurent::q_power(1)); // <rho, (1,-1)> = 1
  PosMonoidElem s = vt_section(d, a);
  CHECK(s.size() == 1);
  CHECK(s.begin()->first == Weight{1, -1});
  // pullback then section is the identity on the positive monoid algebra
  CHECK(vt_section(d, vt_grade_pullback(d, s)) == s);
  // multiplication respects the grading
  VTElem sq = vt_multiply(d, a, a);
  CHECK(sq.terms.size() == 1);
  CHECK(sq.terms.begin()->first == std::make_pair(Weight{2, 2}, Weight{0, -4}));
}
