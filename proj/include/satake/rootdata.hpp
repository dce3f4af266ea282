#ifndef SATAKE_ROOTDATA_HPP
#define SATAKE_ROOTDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

// Rational linear functional on the weight lattice. Houses rho_ad, 2rho,
// lambda_ad and their sums; integral on the root lattice by construction.
struct ShiftCovector {
  RatVec values;

  Rat pair(const Weight& w) const;
  // pairing that must be an integer (root-lattice arguments)
  i64 pair_int(const Weight& w) const;
  ShiftCovector operator+(const ShiftCovector& o) const;
  bool operator==(const ShiftCovector& o) const { return values == o.values; }
};

// Combinatorial skeleton of a pinned dual group: the lattice X = X*(T^),
// simple roots/coroots, and a pinned finite-order automorphism sigma.
// Everything is immutable after validate().
struct BasedRootDatum {
  std::string name;
  int rank = 0;
  std::vector<Weight> simple_roots;
  std::vector<Weight> simple_coroots; // covectors, standard dual pairing
  IntMat sigma;                       // action on X
  std::vector<int> sigma_perm;        // induced permutation of simple indices

  // derived data, filled by validate()
  bool validated = false;
  IntMat cartan;                       // cartan[i][j] = <coroot_i, root_j>
  std::vector<Weight> positive_roots;  // height then lex order
  std::vector<Weight> positive_coroots; // coroot of positive_roots[k]
  int sigma_order = 1;
  std::vector<Weight> fixed_basis;     // Z-basis of X^sigma
  std::vector<std::vector<int>> sigma_orbits; // orbits of simple indices
  std::vector<IntMat> folded_gens;     // longest element of each orbit parabolic
  RatMat simple_coord_solver;          // maps X_Q -> coords in simple-root basis

  int num_simple() const { return (int)simple_roots.size(); }
  bool sigma_is_identity() const;
  Weight apply_sigma(const Weight& w) const { return mat_apply(sigma, w); }
  bool is_sigma_fixed(const Weight& w) const { return apply_sigma(w) == w; }
  i64 coroot_pair(int i, const Weight& w) const { return dot(simple_coroots[i], w); }
  Weight reflect(int i, const Weight& w) const; // s_i(w)
  bool is_dominant(const Weight& w) const;
  bool is_antidominant(const Weight& w) const;

  // rational coordinates of w in the simple-root basis, or nullopt if w
  // is outside the root span
  std::optional<RatVec> root_span_coords(const Weight& w) const;
  // integer coordinates, or nullopt if outside the root lattice
  std::optional<Weight> root_lattice_coords(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const { return root_lattice_coords(w).has_value(); }
};

// Checks all invariants and fills the derived fields. Throws
// not_finite_type / pinning_violated / not_finite_order.
BasedRootDatum validate(BasedRootDatum raw);

ShiftCovector rho_ad(const BasedRootDatum& d);   // <rho_ad, alpha_i> = 1
ShiftCovector two_rho(const BasedRootDatum& d);  // sum of positive coroots
// lambda is a dominant weight of G, i.e. an integer covector on X.
ShiftCovector shift_from_weight(const BasedRootDatum& d, const Weight& lambda);

// lo <= hi in dominance order: hi - lo a nonnegative integer combination
// of simple roots
bool dominance_leq(const BasedRootDatum& d, const Weight& lo, const Weight& hi);

// built-in data
std::vector<std::string> catalog_names();
BasedRootDatum catalog(const std::string& name);

// root-datum file format (JSON schema: name, rank, simple_roots,
// simple_coroots, sigma_matrix?, sigma_permutation?)
BasedRootDatum datum_from_json_text(const std::string& text);
std::string datum_to_json_text(const BasedRootDatum& d);
BasedRootDatum datum_from_file(const std::string& path);

} // namespace satake

#endif
