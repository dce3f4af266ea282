#include <doctest.h>

#include "satake/kostka.hpp"
#include "satake/verify.hpp"

using namespace satake;

TEST_CASE("q-Kostant partition function") {
  BasedRootDatum d = catalog("GL3");
  CHECK(q_kostant_partition(d, {0, 0, 0}) == QLaurent(1));
  CHECK(q_kostant_partition(d, {1, -1, 0}) == QLaurent::q_power(1));
  // (1,0,-1) = a1 + a2 or the highest root: q + q^2
  CHECK(q_kostant_partition(d, {1, 0, -1}).str() == "q+q^2");
  CHECK(q_kostant_partition(d, {-1, 1, 0}).is_zero());
  CHECK(q_kostant_partition(d, {1, 0, 0}).is_zero()); // outside the root lattice
}

TEST_CASE("Kostka-Foulkes examples") {
  BasedRootDatum gl2 = catalog("GL2");
  CHECK(kostka_foulkes(gl2, {2, 0}, {2, 0}) == QLaurent(1));
  CHECK(kostka_foulkes(gl2, {2, 0}, {1, 1}) == QLaurent::q_power(1));
  CHECK(kostka_foulkes(gl2, {3, 0}, {2, 1}) == QLaurent::q_power(1));
  CHECK(kostka_foulkes(gl2, {1, 1}, {2, 0}).is_zero());

  BasedRootDatum gl3 = catalog("GL3");
  CHECK(kostka_foulkes(gl3, {2, 1, 0}, {1, 1, 1}).str() == "q+q^2");
  CHECK(kostka_foulkes(gl3, {2, 0, 0}, {1, 1, 0}) == QLaurent::q_power(1));
  CHECK(kostka_foulkes(gl3, {1, 1, 0}, {1, 0, 0}).is_zero()); // different cosets
}

TEST_CASE("adjoint zero-weight Kostka are the exponents") {
  // K_{theta,0}(q) = sum of q^{e_i} over the exponents of the Weyl group
  CHECK(kostka_foulkes(catalog("SL3"), {1, 1}, {0, 0}).str() == "q+q^2");
  CHECK(kostka_foulkes(catalog("Sp4"), {1, 1}, {0, 0}).str() == "q+q^3");
  CHECK(kostka_foulkes(catalog("G2"), {2, 3}, {0, 0}).str() == "q+q^5");
}

TEST_CASE("Freudenthal multiplicities") {
  BasedRootDatum g2 = catalog("G2");
  CHECK(freudenthal_multiplicity(g2, {2, 3}, {0, 0}) == 2); // adjoint zero space
  CHECK(freudenthal_multiplicity(g2, {2, 3}, {2, 3}) == 1);
  BasedRootDatum sl3 = catalog("SL3");
  CHECK(freudenthal_multiplicity(sl3, {1, 1}, {0, 0}) == 2);
  CHECK(freudenthal_multiplicity(sl3, {2, 2}, {0, 0}) == 3); // dim-27 module
}

TEST_CASE("Kostka at q=1 equals Freudenthal on samples") {
  for (auto name : {"Sp4", "G2"}) {
    BasedRootDatum d = catalog(name);
    for (auto& mu : dominant_weights_up_to(d, 4))
      for (auto& lam : dominant_below(d, mu))
        CHECK(kostka_foulkes(d, mu, lam).eval(1) == freudenthal_multiplicity(d, mu, lam));
  }
}

TEST_CASE("dominant weights below") {
  BasedRootDatum d = catalog("GL2");
  auto below = dominant_below(d, {2, 0});
  CHECK(below == std::vector<Weight>{{1, 1}, {2, 0}});
  CHECK(dominant_below(d, {1, 0}) == std::vector<Weight>{{1, 0}});
}

TEST_CASE("character image values") {
  BasedRootDatum gl2 = catalog("GL2");
  auto ci = character_image(gl2, {2, 0});
  REQUIRE(ci.size() == 2);
  CHECK(ci.at({0, 2}) == QLaurent(1));
  CHECK(ci.at({1, 1}) == QLaurent(1)); // q^1 * K(1/q) with K = q

  BasedRootDatum pgl2 = catalog("PGL2");
  auto cp = character_image(pgl2, {2});
  REQUIRE(cp.size() == 2);
  CHECK(cp.at({-2}) == QLaurent(1));
  CHECK(cp.at({0}) == QLaurent(1));

  // minuscule: a single value 1
  auto cm = character_image(gl2, {1, 0});
  CHECK(cm == std::map<Weight, QLaurent>{{{0, 1}, QLaurent(1)}});
}

TEST_CASE("graded constant-term image") {
  BasedRootDatum gl2 = catalog("GL2");
  auto g = graded_ct_image(gl2, {2, 0});
  REQUIRE(g.size() == 2);
  CHECK(g.at({0, 2}) == QLaurent(1));
  CHECK(g.at({1, 1}) == QLaurent::q_power(1));
  auto m = graded_ct_image(gl2, {1, 0});
  CHECK(m == std::map<Weight, QLaurent>{{{0, 1}, QLaurent(1)}});
}

TEST_CASE("split-only guards") {
  BasedRootDatum u = catalog("U3");
  CHECK_THROWS_AS(kostka_foulkes(u, {1, 0, -1}, {0, 0, 0}), satake_error);
  CHECK_THROWS_AS(character_image(u, {1, 0, -1}), satake_error);
}
