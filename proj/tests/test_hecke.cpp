#include <doctest.h>

#include <random>

#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("prime powers") {
  CHECK(prime_power(2) == std::make_pair((i64)2, 1));
  CHECK(prime_power(9) == std::make_pair((i64)3, 2));
  CHECK(prime_power(32) == std::make_pair((i64)2, 5));
  CHECK(!prime_power(1));
  CHECK(!prime_power(6));
  CHECK(!prime_power(12));
  CHECK_THROWS_AS(HeckeHandle::spherical(catalog("GL2"), 6), satake_error);
}

TEST_CASE("structure constants: rank-one examples") {
  BasedRootDatum gl2 = catalog("GL2");
  HeckeHandle h = HeckeHandle::spherical(gl2);
  HeckeElem t = structure_constants(h, {0, 1}, {0, 1});
  REQUIRE(t.size() == 2);
  CHECK(t.at({0, 2}) == QLaurent(1));
  CHECK(t.at({1, 1}) == QLaurent::monomial(2, 1));

  // dual group SL2: alpha = (2), rho_ad = 1/2
  BasedRootDatum pgl2 = catalog("PGL2");
  HeckeHandle hs = HeckeHandle::spherical(pgl2);
  HeckeElem ts = structure_constants(hs, {-1}, {-1});
  REQUIRE(ts.size() == 2);
  CHECK(ts.at({-2}) == QLaurent(1));
  CHECK(ts.at({0}) == QLaurent::monomial(2, 1));

  // dual group PGL2: alpha = (1), rho_ad = 1, so the cross term is 2q^2
  BasedRootDatum sl2 = catalog("SL2");
  HeckeHandle h2 = HeckeHandle::spherical(sl2);
  CHECK(structure_constants(h2, {-1}, {-1}).at({0}) == QLaurent::monomial(2, 2));

  // unit
  CHECK(structure_constants(h, {0, 0}, {0, 1}) ==
        HeckeElem{{{0, 1}, QLaurent(1)}});
}

TEST_CASE("twisted structure constants stay nonnegative with leading 1") {
  BasedRootDatum u = catalog("U3");
  HeckeHandle h = HeckeHandle::spherical(u);
  Weight a{-1, 0, 1}, b{-2, 0, 2};
  for (auto& [lam, mu] : std::vector<std::pair<Weight, Weight>>{{a, a}, {a, b}, {b, b}}) {
    HeckeElem t = structure_constants(h, lam, mu);
    Weight sum = weight_add(lam, mu);
    REQUIRE(t.count(sum) == 1);
    CHECK(t.at(sum).coeff(0) == 1);
    for (auto& [kappa, c] : t) {
      CHECK(c.coeffs_nonnegative());
      CHECK(!c.has_negative_exponent());
      if (kappa != sum) CHECK(c.coeff(0) == 0);
    }
  }
}

TEST_CASE("associativity and commutativity") {
  std::mt19937 rng(2024);
  for (auto name : {"Sp4", "U3"}) {
    BasedRootDatum d = catalog(name);
    HeckeHandle h = HeckeHandle::spherical(d);
    auto basis = antidominant_fixed_weights(d, 3);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      HeckeElem a{{basis[pick(rng)], QLaurent(1)}};
      HeckeElem b{{basis[pick(rng)], QLaurent::q_power(1)}};
      HeckeElem c{{basis[pick(rng)], QLaurent(1) + QLaurent::q_power(1)}};
      CHECK(hecke_multiply(h, a, b) == hecke_multiply(h, b, a));
      CHECK(hecke_multiply(h, hecke_multiply(h, a, b), c) ==
            hecke_multiply(h, a, hecke_multiply(h, b, c)));
    }
  }
}

TEST_CASE("weight-module handles") {
  BasedRootDatum d = catalog("GL2");
  HeckeHandle base = HeckeHandle::spherical(d);
  HeckeHandle hv = weight_hecke(base, {1, 0});
  LatticeElem m = to_lattice(hv, HeckeElem{{{0, 1}, QLaurent(1)}});
  CHECK(m.coeff({0, 1}) == QLaurent(1));
  CHECK(m.coeff({1, 0}) == QLaurent::q_power(2));
  CHECK_THROWS_AS(weight_hecke(base, {0, 1}), satake_error);
  // trivial weight recovers the spherical shift
  CHECK(weight_hecke(base, {0, 0}).shift == base.shift);
}

TEST_CASE("scaling identity") {
  BasedRootDatum d = catalog("GL2");
  HeckeHandle h1 = HeckeHandle::spherical(d);
  HeckeHandle h2 = weight_hecke(h1, {1, 0});
  CHECK_NOTHROW(scaling_compare(h1, h2, {0, 1}, {0, 1}));
  CHECK_NOTHROW(scaling_compare(h1, h1, {0, 1}, {0, 1})); // s = 0
}

TEST_CASE("mod-p degeneration") {
  BasedRootDatum d = catalog("GL2");
  HeckeHandle h = HeckeHandle::spherical(d, 2);
  auto t = modp_structure(h, {0, 1}, {0, 1});
  // the 2q coefficient at (1,1) vanishes mod 2
  CHECK(t == std::map<Weight, i64>{{{0, 2}, 1}});
  HeckeHandle h3 = HeckeHandle::spherical(d, 3);
  CHECK(modp_structure(h3, {0, 1}, {1, 1}) == std::map<Weight, i64>{{{1, 2}, 1}});
  HeckeHandle sym = HeckeHandle::spherical(d);
  CHECK_THROWS_AS(modp_structure(sym, {0, 1}, {0, 1}), satake_error);
}

TEST_CASE("double-coset basis") {
  BasedRootDatum d = catalog("GL2");
  HeckeHandle h = HeckeHandle::spherical(d);
  CHECK(double_coset_basis(h, {0, 0}) == HeckeElem{{{0, 0}, QLaurent(1)}});
  CHECK(double_coset_basis(h, {1, 0}) == HeckeElem{{{0, 1}, QLaurent(1)}});
  HeckeElem dc2 = double_coset_basis(h, {2, 0});
  REQUIRE(dc2.size() == 2);
  CHECK(dc2.at({0, 2}) == QLaurent(1));
  CHECK(dc2.at({1, 1}) == QLaurent(-1) + QLaurent::q_power(1)); // q - 1

  BasedRootDatum u = catalog("U3");
  HeckeHandle hu = HeckeHandle::spherical(u);
  CHECK_THROWS_AS(double_coset_basis(hu, {1, 0, -1}), satake_error);
}

TEST_CASE("dc coordinates invert the dc basis") {
  BasedRootDatum d = catalog("GL3");
  HeckeHandle h = HeckeHandle::spherical(d);
  for (Weight mu : {Weight{1, 1, 0}, Weight{2, 0, 0}, Weight{2, 1, 0}}) {
    HeckeElem dc = double_coset_basis(h, mu);
    HeckeElem coords = dc_coordinates(h, dc);
    CHECK(coords == HeckeElem{{mu, QLaurent(1)}});
  }
  // a combination
  HeckeElem x = double_coset_basis(h, {2, 1, 0});
  for (auto& [k, v] : double_coset_basis(h, {1, 1, 1})) x[k] += v * QLaurent::q_power(2);
  HeckeElem coords = dc_coordinates(h, x);
  CHECK(coords == HeckeElem{{{1, 1, 1}, QLaurent::q_power(2)}, {{2, 1, 0}, QLaurent(1)}});
}

TEST_CASE("dc structure constants at prime powers are nonnegative") {
  BasedRootDatum d = catalog("GL2");
  HeckeHandle h = HeckeHandle::spherical(d);
  std::vector<Weight> mus = {{1, 0}, {1, 1}, {2, 0}, {2, 1}};
  for (auto& mu : mus)
    for (auto& nu : mus) {
      HeckeElem prod = hecke_multiply(h, double_coset_basis(h, mu), double_coset_basis(h, nu));
      for (auto& [kappa, c] : dc_coordinates(h, prod)) {
        CHECK(!c.has_negative_exponent());
        for (i64 q : {2, 3, 4, 5}) CHECK(c.eval(q) >= 0);
      }
    }
}
