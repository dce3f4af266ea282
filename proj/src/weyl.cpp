#include "satake/weyl.hpp"

#include <algorithm>
#include <set>

namespace satake {

namespace {

void require_validated(const BasedRootDatum& d) {
  if (!d.validated) fail(errc::parse_error, "datum must pass validate() first");
}

void require_sigma_fixed(const BasedRootDatum& d, const Weight& w) {
  if (!d.is_sigma_fixed(w))
    fail(errc::not_sigma_fixed, weight_str(w) + " is not sigma-fixed");
}

std::set<Weight> closure(const std::vector<Weight>& seeds,
                         const std::vector<const IntMat*>& gens, i64 cap) {
  std::set<Weight> seen(seeds.begin(), seeds.end());
  std::vector<Weight> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (auto* g : gens) {
      Weight nv = mat_apply(*g, v);
      if (seen.insert(nv).second) {
        if ((i64)seen.size() > cap) fail(errc::orbit_too_large, "orbit cap exceeded");
        queue.push_back(nv);
      }
    }
  }
  return seen;
}

} // namespace

OrbitResult w_orbit(const BasedRootDatum& d, const Weight& w, i64 cap) {
  require_validated(d);
  std::set<Weight> seen{w};
  std::vector<Weight> queue{w};
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < d.num_simple(); ++i) {
      Weight nv = d.reflect(i, v);
      if (seen.insert(nv).second) {
        if ((i64)seen.size() > cap) fail(errc::orbit_too_large, "orbit cap exceeded");
        queue.push_back(nv);
      }
    }
  }
  OrbitResult r;
  r.elements.assign(seen.begin(), seen.end());
  r.antidominant_rep = antidominant_conjugate(d, w);
  r.dominant_rep = dominant_conjugate(d, w);
  return r;
}

Weight antidominant_conjugate(const BasedRootDatum& d, const Weight& w) {
  Weight v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.num_simple(); ++i) {
      if (d.coroot_pair(i, v) > 0) {
        v = d.reflect(i, v);
        moved = true;
      }
    }
  }
  return v;
}

Weight dominant_conjugate(const BasedRootDatum& d, const Weight& w) {
  Weight v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.num_simple(); ++i) {
      if (d.coroot_pair(i, v) < 0) {
        v = d.reflect(i, v);
        moved = true;
      }
    }
  }
  return v;
}

Weight antidominant_in_fixed(const BasedRootDatum& d, const Weight& w) {
  require_validated(d);
  require_sigma_fixed(d, w);
  Weight v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t o = 0; o < d.folded_gens.size(); ++o) {
      // pairings are constant along a sigma-orbit on a fixed weight
      int i = d.sigma_orbits[o][0];
      if (d.coroot_pair(i, v) > 0) {
        v = mat_apply(d.folded_gens[o], v);
        moved = true;
      }
    }
  }
  return v;
}

OrbitResult w0_orbit(const BasedRootDatum& d, const Weight& w, i64 cap) {
  require_validated(d);
  require_sigma_fixed(d, w);

  // method (a): W.w intersected with the fixed lattice
  OrbitResult full = w_orbit(d, w, cap);
  std::vector<Weight> fixed;
  for (auto& v : full.elements)
    if (d.is_sigma_fixed(v)) fixed.push_back(v);

  // method (b): closure under the folded generators
  std::vector<const IntMat*> gens;
  for (auto& g : d.folded_gens) gens.push_back(&g);
  std::set<Weight> folded = closure({w}, gens, cap);

  if (!std::equal(fixed.begin(), fixed.end(), folded.begin(), folded.end()) ||
      fixed.size() != folded.size())
    fail(errc::method_mismatch, "W.w \xE2\x88\xA9 X^sigma differs from folded-generator closure at " +
                                    weight_str(w));

  OrbitResult r;
  r.elements = fixed;
  r.antidominant_rep = antidominant_in_fixed(d, w);
  r.dominant_rep = w;
  for (auto& v : fixed)
    if (d.is_dominant(v)) r.dominant_rep = v;
  return r;
}

std::vector<SignedElement> weyl_elements(const BasedRootDatum& d, i64 cap) {
  require_validated(d);
  std::vector<SignedElement> out;
  std::set<IntMat> seen;
  std::vector<IntMat> queue{mat_identity(d.rank)};
  seen.insert(queue[0]);
  std::vector<IntMat> refl;
  for (int i = 0; i < d.num_simple(); ++i) {
    IntMat S = mat_identity(d.rank);
    for (int r = 0; r < d.rank; ++r)
      for (int k = 0; k < d.rank; ++k) S[r][k] -= d.simple_roots[i][r] * d.simple_coroots[i][k];
    refl.push_back(S);
  }
  while (!queue.empty()) {
    IntMat m = queue.back();
    queue.pop_back();
    for (auto& S : refl) {
      IntMat nm = mat_mul(S, m);
      if (seen.insert(nm).second) {
        if ((i64)seen.size() > cap)
          fail(errc::weyl_group_too_large, "Weyl group enumeration cap exceeded");
        queue.push_back(nm);
      }
    }
  }
  for (auto& m : seen) out.push_back({m, (int)mat_det(m)});
  return out;
}

} // namespace satake
