#ifndef SATAKE_KOSTKA_HPP
#define SATAKE_KOSTKA_HPP

#include <map>

#include "satake/charalg.hpp"

namespace satake {

inline constexpr i64 kWeylCap = 10000;

// q-analogue of the Kostant partition function: sum over expressions of
// beta as a nonnegative combination of positive roots, graded by the
// number of roots used. Split data only.
QLaurent q_kostant_partition(const BasedRootDatum& d, const Weight& beta);

// Kostka-Foulkes polynomial K_{mu,lam}(q) via the alternating sum over W,
// computed in the doubled lattice to keep rho integral. Split data only.
QLaurent kostka_foulkes(const BasedRootDatum& d, const Weight& mu, const Weight& lam);

// dim V_mu(lam) by Freudenthal's recursion; independent oracle for
// kostka_foulkes at q=1.
i64 freudenthal_multiplicity(const BasedRootDatum& d, const Weight& mu, const Weight& lam);

// All dominant weights nu <= mu (dominance order) in mu + root lattice.
std::vector<Weight> dominant_below(const BasedRootDatum& d, const Weight& mu);

// Sign-normalized Frobenius-trace vector of V_mu: the value at the
// antidominant weight lam is q^{<rho_ad, lam - w0.mu>} K_{mu,lam+}(1/q),
// re-expressed in Z[q] via the degree bound. Keys are antidominant.
std::map<Weight, QLaurent> character_image(const BasedRootDatum& d, const Weight& mu);

// Graded constant-term image of the trace function of V_mu, as m-basis
// coordinates: sum over all weights lam of V_mu of
// q^{<rho_ad, lam - w0.mu>} mult(lam) e^{lam}, regrouped in the m-basis.
std::map<Weight, QLaurent> graded_ct_image(const BasedRootDatum& d, const Weight& mu);

} // namespace satake

#endif
