/*
 * springer.hpp
 * Numerical invariants of the generalized affine Springer fiber attached
 * to (gamma, lambda): nonemptiness, dimension formulas, the
 * lambda-twisted discriminant, irreducible-component counts with their
 * epistemic status, the Coxeter bound on regular components, and the
 * exhaustive lower-bound verifier.
 */
#pragma once

#include <optional>
#include <string>

#include "springer/coxeter.hpp"
#include "springer/order.hpp"

namespace springer {

enum class ProvenanceTag { THEOREM, CONJECTURAL, COMPANION };
const char* tag_name(ProvenanceTag t);

struct OrbitCount {
    long count;
    ProvenanceTag tag;
};

struct RegularBound {
    long bound;
    bool exact;
};

struct ZeroDimInfo {
    Rat dim;      // always 0
    bool torsor;  // X = X^reg is a single P_a-torsor
    long count;   // = m_{lambda lambda} = 1
    std::vector<std::string> warnings;
};

struct FiberReport {
    bool nonempty = false;
    CoweightQ newton;
    bool certified = true;
    std::vector<std::string> warnings;
    // populated only when nonempty
    std::optional<CoweightQ> mu_star;
    std::optional<Rat> d;
    std::optional<Rat> r;
    std::optional<long> c;
    std::optional<Rat> d_lambda;
    std::optional<Rat> dim_regular;
    std::optional<Rat> dim_total;
    std::optional<ProvenanceTag> dim_total_tag;
    std::optional<long> orbit_count;
    std::optional<ProvenanceTag> orbit_tag;
    std::optional<long> regular_orbit_bound;
    std::optional<bool> regular_bound_exact;
    std::optional<bool> zero_dimensional;
};

// Newton criterion nu_gamma <=_Q lambda; for concrete inputs of semisimple
// rank <= 3 the Steinberg criterion is evaluated too and any conclusive
// disagreement raises CriteriaDisagree.
bool is_nonempty(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// <rho, lambda> + d(gamma)/2; concrete (split) gamma only.
Rat dimension_unramified(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// <rho, lambda> + (d(gamma) - c(gamma))/2.
Rat dimension_regular_locus(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// d_lambda = sum over the zero-pairing root orbit + <2 rho, lambda - nu>;
// asserted equal to <2 rho, lambda> + d(gamma) and nonnegative.
Rat twisted_discriminant(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// Requires d_lambda = 0 (NotZeroTwisted otherwise); checks nu = lambda and
// a vanishing profile as consequences and reports the rigid picture.
ZeroDimInfo zero_dim_report(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// m_{lambda mu*} with mu* the smallest integral approximation of the
// Newton point; THEOREM for unramified (concrete) gamma or lambda = 0.
OrbitCount orbit_count(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// (|Cox(W,S)|, exactness), exact when lambda is chamber-interior and
// lambda - mu* is interior to the positive coroot cone.
RegularBound regular_orbit_bound(const RootDatum& d, const TorusElement& g,
                                 const CoweightQ& lam);

FiberReport full_report(const RootDatum& d, const TorusElement& g, const CoweightQ& lam);

// ---------------------------------------------------------------------------
// Exhaustive lower-bound verifier (m_{lambda mu} >= |Cox(W,S)| on interior
// pairs). Works on the dual weight lattice in x-coordinates.

struct LowerBoundRow {
    IVec lam;   // dual-weight coordinates
    IVec mu;
    long mult;
    bool ok;
};

struct LowerBoundReport {
    long bound = 1;
    size_t pairs_checked = 0;
    long min_mult = 0;
    std::optional<std::pair<IVec, IVec>> min_pair;
    std::vector<LowerBoundRow> rows;      // populated when keep_rows
    std::vector<LowerBoundRow> failures;  // rows with mult < bound
};

LowerBoundReport verify_lower_bound(const RootDatum& d, long radius, bool keep_rows = false,
                                    bool cross_check_kostant = true);

}  // namespace springer
