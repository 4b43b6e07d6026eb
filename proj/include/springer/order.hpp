/*
 * order.hpp
 * Dominance orders <=_Q and <=, dominant weight polytopes P_lambda and
 * their open strata, the constructive meet, the smallest integral
 * approximation of a rational Newton point, Steinberg-stratum membership
 * by fundamental-trace valuations, and the enhanced-coweight dominance
 * test coming from the arc space of the group compactification.
 */
#pragma once

#include "springer/torus.hpp"

namespace springer {

// lam - nu is a nonnegative rational combination of simple coroots (the
// central component must vanish exactly).
bool leq_Q(const RootDatum& d, const CoweightQ& nu, const CoweightQ& lam);

// lam - mu is a nonnegative *integral* combination of simple coroots.
// Both arguments must be integral.
bool leq_int(const RootDatum& d, const CoweightQ& mu, const CoweightQ& lam);

// The unique dominant integral mu with (lam1 - D) cap (lam2 - D) = mu - D,
// built constructively from the positive/negative split of lam1 - lam2.
CoweightQ meet(const RootDatum& d, const CoweightQ& lam1, const CoweightQ& lam2);

struct IntegralApproximation {
    CoweightQ mu;                            // the smallest integral dominator
    std::vector<CoweightQ> minimal_candidates;  // witnesses folded with meet
};

// Smallest dominant integral mu with nu <=_Q mu. nu must be dominant and
// its central class integral (NoIntegralDominator otherwise). Uniqueness
// is re-verified by folding meet over all minimal candidates found.
IntegralApproximation smallest_integral_approximation_full(const RootDatum& d,
                                                           const CoweightQ& nu);
CoweightQ smallest_integral_approximation(const RootDatum& d, const CoweightQ& nu);

// Maximal integral dominant coweights mu with mu <=_Q nu (the integral
// approximation from below used by the Chen-Zhu formulation). Possibly
// empty, possibly several: nothing is asserted about uniqueness.
std::vector<CoweightQ> largest_integral_minorants(const RootDatum& d, const CoweightQ& nu);

// nu in P_lambda = (dominant cone) cap (lam - D)?
bool in_polytope(const RootDatum& d, const CoweightQ& lam, const CoweightQ& nu);

// nu in the open stratum P_lambda° = P_lambda - union of P_mu, mu < lam?
bool in_open_stratum(const RootDatum& d, const CoweightQ& lam, const CoweightQ& nu);

// All integral dominant mu <= lam (includes lam itself).
std::vector<CoweightQ> dominated_dominants(const RootDatum& d, const CoweightQ& lam);

// chi(gamma) in C_{<=lambda}: val(Tr rho_i(gamma)) >= <omega_i, w0(lam)>
// for every fundamental representation, plus det-class matching. Concrete
// gamma, semisimple rank <= 3.
bool steinberg_contains(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// chi(gamma) in the open stratum C_lambda°.
bool steinberg_open_stratum(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// A pair of adjoint coweights (x-coordinate vectors on the derived group)
// with nu1 + nu2 in the coroot lattice; nu1 is the abelianization side.
struct EnhancedCoweight {
    RatVec nu1, nu2;
    bool operator==(const EnhancedCoweight& o) const { return nu1 == o.nu1 && nu2 == o.nu2; }
};

// lambda^+ = (-w0(lam_bar), w0(lam_bar)).
EnhancedCoweight lambda_plus(const RootDatum& d, const CoweightQ& lam);

bool enhanced_integral(const RootDatum& d, const EnhancedCoweight& v);
bool enhanced_dominant(const RootDatum& d, const EnhancedCoweight& v);

// mu+ <= lam+ via the lowest-entry pairings <w0(omega_i^+), .>; requires
// equal abelianization components (AbelianizationMismatch otherwise) and
// dominant inputs. Cross-checked internally against the coroot-cone form.
bool enhanced_leq(const RootDatum& d, const EnhancedCoweight& mu_plus,
                  const EnhancedCoweight& lam_plus);

// The direct definition: equal nu1 and nu2(lam) - nu2(mu) a nonnegative
// rational combination of simple coroots.
bool enhanced_leq_cone(const RootDatum& d, const EnhancedCoweight& mu_plus,
                       const EnhancedCoweight& lam_plus);

}  // namespace springer
