#include <doctest.h>

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "satake/rootdata.hpp"

using namespace satake;

namespace {
errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const satake_error& e) {
    return e.code();
  }
  FAIL("expected satake_error");
  return errc::parse_error;
}
} // namespace

TEST_CASE("catalog contents") {
  auto names = catalog_names();
  for (auto n : {"GL2", "GL3", "PGL2", "PGL3", "SL2", "Sp4", "G2", "U3", "GL2xGL2"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(code_of([] { catalog("nope"); }) == errc::unknown_name);
}

TEST_CASE("GL2 basic structure") {
  BasedRootDatum d = catalog("GL2");
  CHECK(d.rank == 2);
  CHECK(d.positive_roots == std::vector<Weight>{{1, -1}});
  CHECK(d.positive_coroots == std::vector<Weight>{{1, -1}});
  CHECK(d.sigma_is_identity());
  ShiftCovector rho = rho_ad(d);
  CHECK(rho.pair({1, -1}) == Rat(1)); // <rho_ad, alpha> = 1
  CHECK(rho.pair_int({1, -1}) == 1);
  CHECK(rho.values == RatVec{Rat(1, 2), Rat(-1, 2)});
  CHECK(d.is_dominant({3, 1}));
  CHECK(!d.is_dominant({1, 3}));
  CHECK(d.is_antidominant({1, 3}));
}

TEST_CASE("positive root counts and Cartan types") {
  CHECK(catalog("GL3").positive_roots.size() == 3);
  CHECK(catalog("Sp4").positive_roots.size() == 4);
  CHECK(catalog("G2").positive_roots.size() == 6);
  CHECK(catalog("PGL3").positive_roots.size() == 3);
  CHECK(catalog("GL2xGL2").positive_roots.size() == 2);
}

TEST_CASE("G2 highest root") {
  BasedRootDatum d = catalog("G2");
  // simple coords of every positive root are nonneg; the long highest root
  // is 2a1 + 3a2
  Weight theta = d.positive_roots.back();
  CHECK(theta == Weight{2, 3});
  CHECK(*d.root_lattice_coords(theta) == Weight{2, 3});
}

TEST_CASE("dominance order") {
  BasedRootDatum d = catalog("GL2");
  CHECK(dominance_leq(d, {1, 1}, {2, 0}));
  CHECK(!dominance_leq(d, {2, 0}, {1, 1}));
  CHECK(dominance_leq(d, {2, 0}, {2, 0}));
  CHECK(!dominance_leq(d, {1, 0}, {2, 0})); // different root-lattice coset
}

TEST_CASE("sigma data for U3") {
  BasedRootDatum d = catalog("U3");
  CHECK(d.sigma_order == 2);
  CHECK(!d.sigma_is_identity());
  CHECK(d.is_sigma_fixed({1, 0, -1}));
  CHECK(!d.is_sigma_fixed({1, 0, 0}));
  CHECK(d.fixed_basis.size() == 1);
  CHECK(d.sigma_orbits.size() == 1); // the two simple roots are swapped
  CHECK(d.folded_gens.size() == 1);
  // folded generator fixes the fixed lattice setwise and acts as the
  // longest element of the A2 parabolic on it
  Weight w{1, 0, -1};
  Weight im = mat_apply(d.folded_gens[0], w);
  CHECK(im == Weight{-1, 0, 1});
}

TEST_CASE("GL2xGL2 swap involution") {
  BasedRootDatum d = catalog("GL2xGL2");
  CHECK(d.rank == 4);
  CHECK(d.sigma_order == 2);
  CHECK(d.apply_sigma({1, 2, 3, 4}) == Weight{3, 4, 1, 2});
  CHECK(d.is_sigma_fixed({1, 0, 1, 0}));
  CHECK(d.fixed_basis.size() == 2);
}

TEST_CASE("validate rejects bad data") {
  BasedRootDatum bad;
  bad.name = "bad";
  bad.rank = 1;
  bad.simple_roots = {{1}};
  bad.simple_coroots = {{1}}; // Cartan entry 1, not 2
  CHECK(code_of([&] { validate(bad); }) == errc::not_finite_type);

  BasedRootDatum aff; // affine A1: not finite type
  aff.name = "affine";
  aff.rank = 2;
  aff.simple_roots = {{1, -1}, {-1, 1}};
  aff.simple_coroots = {{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(validate(aff), satake_error);

  BasedRootDatum tw = catalog("GL2");
  tw.validated = false;
  tw.sigma = {{0, 1}, {1, 0}}; // swaps e1,e2: sends alpha to -alpha, breaks pinning
  CHECK(code_of([&] { validate(tw); }) == errc::pinning_violated);
}

TEST_CASE("shift covectors") {
  BasedRootDatum d = catalog("GL2");
  ShiftCovector s = shift_from_weight(d, {1, 0});
  CHECK(s.pair_int({1, -1}) == 1);
  CHECK(code_of([&] { shift_from_weight(d, {0, 1}); }) == errc::not_dominant);
  ShiftCovector t = two_rho(d);
  CHECK(t.pair_int({1, 0}) == 1);
}

TEST_CASE("json round trip") {
  for (auto name : {"GL2", "U3", "G2"}) {
    BasedRootDatum d = catalog(name);
    BasedRootDatum back = datum_from_json_text(datum_to_json_text(d));
    CHECK(back.rank == d.rank);
    CHECK(back.simple_roots == d.simple_roots);
    CHECK(back.simple_coroots == d.simple_coroots);
    CHECK(mat_equal(back.sigma, d.sigma));
    CHECK(back.sigma_perm == d.sigma_perm);
  }
  CHECK(code_of([] { datum_from_json_text("{"); }) == errc::parse_error);
  CHECK(code_of([] { datum_from_json_text("{\"rank\": 1}"); }) == errc::parse_error);
}

TEST_CASE("json sigma permutation consistency") {
  BasedRootDatum d = catalog("U3");
  CHECK(d.sigma_perm == std::vector<int>{1, 0});
  // claim the identity permutation against the nontrivial matrix
  auto j = nlohmann::json::parse(datum_to_json_text(d));
  j["sigma_permutation"] = {0, 1};
  CHECK_THROWS_AS(datum_from_json_text(j.dump()), satake_error);
}
