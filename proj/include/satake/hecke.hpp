#ifndef SATAKE_HECKE_HPP
#define SATAKE_HECKE_HPP

#include <map>
#include <optional>

#include "satake/kostka.hpp"

namespace satake {

// Coordinates in the m-basis, keyed by antidominant sigma-fixed weights.
using HeckeElem = std::map<Weight, QLaurent>;

// Model of H_G (shift = rho_ad) or H_G(V) (shift = lambda_ad + rho_ad).
// q is empty in symbolic mode, otherwise a prime power.
struct HeckeHandle {
  BasedRootDatum datum;
  ShiftCovector shift;
  std::optional<i64> q;

  static HeckeHandle spherical(const BasedRootDatum& d, std::optional<i64> q = std::nullopt);
};

// lambda a dominant weight of G; returns the handle for H_G(V_lambda),
// shift lambda_ad + rho_ad. In numeric mode q must equal the chosen p.
HeckeHandle weight_hecke(const HeckeHandle& base, const Weight& lambda);

LatticeElem to_lattice(const HeckeHandle& h, const HeckeElem& a);
HeckeElem from_lattice(const HeckeHandle& h, const LatticeElem& x);

HeckeElem hecke_multiply(const HeckeHandle& h, const HeckeElem& a, const HeckeElem& b);
// coordinates of m_lam * m_mu
HeckeElem structure_constants(const HeckeHandle& h, const Weight& lam, const Weight& mu);

// structure constants at numeric q = p^k, reduced mod p; the result must
// be the monoid law delta_{kappa, lam+mu}
std::map<Weight, i64> modp_structure(const HeckeHandle& h, const Weight& lam, const Weight& mu);

// checks c^{(shift2)}_kappa = q^{<shift2-shift1, lam+mu-kappa>} c^{(shift1)}_kappa
// symbolically; throws mismatch with the offending kappa
void scaling_compare(const HeckeHandle& h1, const HeckeHandle& h2, const Weight& lam,
                     const Weight& mu);

// m-coordinates of CT(1_{K mu(pi) K}) via triangular inversion of
// character images. Split data only.
HeckeElem double_coset_basis(const HeckeHandle& h, const Weight& mu);

// expand an element given in m-coordinates into dc-basis coordinates
// (triangular solve against double_coset_basis)
HeckeElem dc_coordinates(const HeckeHandle& h, const HeckeElem& m_coords);

// prime-power decomposition; nullopt if q is not a prime power >= 2
std::optional<std::pair<i64, int>> prime_power(i64 q);

} // namespace satake

#endif
