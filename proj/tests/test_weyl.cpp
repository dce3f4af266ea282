#include <doctest.h>

#include <random>

#include "satake/verify.hpp"
#include "satake/weyl.hpp"

using namespace satake;

TEST_CASE("orbits and representatives") {
  BasedRootDatum d = catalog("GL3");
  OrbitResult o = w_orbit(d, {2, 1, 0});
  CHECK(o.elements.size() == 6);
  CHECK(o.antidominant_rep == Weight{0, 1, 2});
  CHECK(o.dominant_rep == Weight{2, 1, 0});
  CHECK(w_orbit(d, {1, 1, 1}).elements.size() == 1);
  CHECK(w_orbit(d, {2, 2, 0}).elements.size() == 3);
}

TEST_CASE("weyl group sizes") {
  CHECK(weyl_elements(catalog("GL2"), kWeylCap).size() == 2);
  CHECK(weyl_elements(catalog("GL3"), kWeylCap).size() == 6);
  CHECK(weyl_elements(catalog("Sp4"), kWeylCap).size() == 8);
  CHECK(weyl_elements(catalog("G2"), kWeylCap).size() == 12);
  CHECK(weyl_elements(catalog("GL1"), kWeylCap).size() == 1);
}

TEST_CASE("sign is the determinant") {
  for (auto& w : weyl_elements(catalog("Sp4"), kWeylCap)) {
    CHECK((w.sign == 1 || w.sign == -1));
    CHECK(mat_det(w.mat) == w.sign);
  }
}

TEST_CASE("fixed-lattice orbits in the twisted case") {
  BasedRootDatum d = catalog("U3");
  OrbitResult o = w0_orbit(d, {-1, 0, 1});
  CHECK(o.elements == std::vector<Weight>{{-1, 0, 1}, {1, 0, -1}});
  CHECK(o.antidominant_rep == Weight{-1, 0, 1});
  CHECK(o.dominant_rep == Weight{1, 0, -1});
  CHECK(antidominant_in_fixed(d, {2, 0, -2}) == Weight{-2, 0, 2});
}

TEST_CASE("w0_orbit requires a fixed weight") {
  BasedRootDatum d = catalog("U3");
  CHECK_THROWS_AS(w0_orbit(d, {1, 0, 0}), satake_error);
}

TEST_CASE("split w0_orbit equals the full orbit") {
  BasedRootDatum d = catalog("Sp4");
  for (auto& w : antidominant_fixed_weights(d, 3)) {
    auto a = w_orbit(d, w);
    auto b = w0_orbit(d, w);
    CHECK(a.elements == b.elements);
  }
}

TEST_CASE("representative properties on random weights") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<i64> pick(-4, 4);
  for (auto name : {"GL3", "Sp4", "G2", "U3", "GL2xGL2"}) {
    BasedRootDatum d = catalog(name);
    for (int trial = 0; trial < 25; ++trial) {
      Weight w((size_t)d.rank);
      for (auto& x : w) x = pick(rng);
      Weight a = antidominant_conjugate(d, w);
      Weight dm = dominant_conjugate(d, w);
      CHECK(d.is_antidominant(a));
      CHECK(d.is_dominant(dm));
      CHECK(dominance_leq(d, a, dm));
      // orbit has exactly one antidominant element
      auto orbit = w_orbit(d, w);
      int n_anti = 0;
      for (auto& v : orbit.elements)
        if (d.is_antidominant(v)) ++n_anti;
      CHECK(n_anti == 1);
      // orbit size divides |W|
      size_t wsize = weyl_elements(d, kWeylCap).size();
      CHECK(wsize % orbit.elements.size() == 0);
    }
  }
}

TEST_CASE("orbit cap") {
  BasedRootDatum d = catalog("G2");
  CHECK_THROWS_AS(w_orbit(d, {1, 1}, 3), satake_error);
}
