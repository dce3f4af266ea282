#ifndef SATAKE_WEYL_HPP
#define SATAKE_WEYL_HPP

#include <vector>

#include "satake/rootdata.hpp"

namespace satake {

struct OrbitResult {
  std::vector<Weight> elements; // sorted lexicographically
  Weight antidominant_rep;
  Weight dominant_rep;
};

inline constexpr i64 kDefaultOrbitCap = 1000000;

// Full W-orbit by closure under simple reflections.
OrbitResult w_orbit(const BasedRootDatum& d, const Weight& w, i64 cap = kDefaultOrbitCap);

// W_0-orbit of a sigma-fixed weight, computed both as W.w intersected with
// X^sigma and by closure under folded generators; the two must agree.
OrbitResult w0_orbit(const BasedRootDatum& d, const Weight& w, i64 cap = kDefaultOrbitCap);

// Unique antidominant element of W_0.w (it is also W-antidominant).
Weight antidominant_in_fixed(const BasedRootDatum& d, const Weight& w);

// representatives in the full W-orbit
Weight antidominant_conjugate(const BasedRootDatum& d, const Weight& w);
Weight dominant_conjugate(const BasedRootDatum& d, const Weight& w);

// All elements of W as matrices, paired with (-1)^length = det.
struct SignedElement {
  IntMat mat;
  int sign;
};
std::vector<SignedElement> weyl_elements(const BasedRootDatum& d, i64 cap);

} // namespace satake

#endif
