#include "springer/springer.hpp"

#include "springer/errors.hpp"
#include "springer/multiplicity.hpp"

namespace springer {

const char* tag_name(ProvenanceTag t) {
    switch (t) {
        case ProvenanceTag::THEOREM: return "THEOREM";
        case ProvenanceTag::CONJECTURAL: return "CONJECTURAL";
        case ProvenanceTag::COMPANION: return "COMPANION";
    }
    return "?";
}

namespace {

void require_lambda(const RootDatum& d, const CoweightQ& lam) {
    if (!d.is_integral(lam)) fail(ErrorCode::NotIntegral, "lambda must be integral");
    if (!d.is_dominant(lam)) fail(ErrorCode::MalformedSpec, "lambda must be dominant");
}

void require_nonempty(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    require_lambda(d, lam);
    if (!is_nonempty(d, g, lam))
        fail(ErrorCode::EmptyFiber, "the fiber is empty: Newton point not <=_Q lambda");
}

}  // namespace

bool is_nonempty(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    // Non-dominant lambda is allowed here and gives the bare cone test
    // (always false against a dominant Newton point unless lambda is in the
    // cone); the Steinberg cross-check needs a dominant lambda.
    if (!d.is_integral(lam)) fail(ErrorCode::NotIntegral, "lambda must be integral");
    CoweightQ nu = newton_point(d, g);
    bool newton_criterion = leq_Q(d, nu, lam);
    if (g.is_concrete() && d.semisimple_rank() <= 3 && d.is_dominant(lam)) {
        bool steinberg;
        try {
            steinberg = steinberg_contains(d, g, lam);
        } catch (const SpringerError& e) {
            if (e.code() == ErrorCode::InconclusiveTruncation) return newton_criterion;
            throw;
        }
        if (steinberg != newton_criterion)
            fail(ErrorCode::CriteriaDisagree,
                 std::string("nonemptiness criteria disagree: Newton says ") +
                     (newton_criterion ? "yes" : "no") + ", Steinberg says " +
                     (steinberg ? "yes" : "no"));
    }
    return newton_criterion;
}

Rat dimension_unramified(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    if (!g.is_concrete())
        fail(ErrorCode::MalformedSpec, "unramified dimension formula needs a concrete element");
    require_nonempty(d, g, lam);
    return d.pair(d.rho(), lam) + discriminant_valuation(d, g) / 2;
}

Rat dimension_regular_locus(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    require_nonempty(d, g, lam);
    Rat dv = discriminant_valuation(d, g);
    Rat cv(c_gamma(d, g));
    return d.pair(d.rho(), lam) + (dv - cv) / 2;
}

Rat twisted_discriminant(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    require_nonempty(d, g, lam);
    CoweightQ nu = newton_point(d, g);
    ValuationProfile prof = valuation_profile(d, g);
    // both sign orbits of the zero-pairing roots contribute
    Rat line1 = Rat(2) * prof.sum_over_zero_pairing(d, nu) +
                Rat(2) * d.pair(d.rho(), lam - nu);
    Rat line2 = Rat(2) * d.pair(d.rho(), lam) + discriminant_valuation(d, g);
    if (line1 != line2)
        fail(ErrorCode::Internal, "twisted discriminant lines disagree: " +
                                      rat_to_string(line1) + " vs " + rat_to_string(line2));
    if (line1 < 0) fail(ErrorCode::Internal, "twisted discriminant negative on a nonempty fiber");
    return line1;
}

ZeroDimInfo zero_dim_report(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    Rat dl = twisted_discriminant(d, g, lam);
    if (dl != 0)
        fail(ErrorCode::NotZeroTwisted,
             "lambda-twisted discriminant is " + rat_to_string(dl) + ", not 0");
    // consequences, checked rather than assumed
    CoweightQ nu = newton_point(d, g);
    if (!(nu == lam)) fail(ErrorCode::Internal, "d_lambda = 0 but nu != lambda");
    ValuationProfile prof = valuation_profile(d, g);
    for (const auto& v : prof.values)
        if (v != 0) fail(ErrorCode::Internal, "d_lambda = 0 but the profile is nonzero");
    ZeroDimInfo info;
    info.dim = 0;
    info.torsor = true;
    long m = m_lambda_mu(d, lam, lam);
    if (m != 1) fail(ErrorCode::Internal, "m_{lambda lambda} != 1");
    info.count = m;
    if (!g.is_concrete() && g.abstract_data().e > 1)
        info.warnings.push_back(
            "input claims ramification but d_lambda = 0 forces an unramified class; "
            "the descriptor is unrealizable");
    return info;
}

OrbitCount orbit_count(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    require_nonempty(d, g, lam);
    CoweightQ nu = newton_point(d, g);
    CoweightQ mu_star = smallest_integral_approximation(d, nu);
    long m = m_lambda_mu(d, lam, mu_star);
    if (m < 1) fail(ErrorCode::Internal, "orbit count vanished on a nonempty fiber");
    bool theorem = g.is_concrete() || is_zero(lam.coords);
    return {m, theorem ? ProvenanceTag::THEOREM : ProvenanceTag::CONJECTURAL};
}

RegularBound regular_orbit_bound(const RootDatum& d, const TorusElement& g,
                                 const CoweightQ& lam) {
    require_nonempty(d, g, lam);
    CoweightQ nu = newton_point(d, g);
    CoweightQ mu_star = smallest_integral_approximation(d, nu);
    bool interior_chamber = true;
    for (size_t i = 0; i < d.semisimple_rank(); ++i)
        if (lam.coords[i] <= 0) interior_chamber = false;
    bool interior_cone = true;
    for (const auto& t : d.coroot_coords(lam - mu_star))
        if (t <= 0) interior_cone = false;
    if (d.semisimple_rank() == 0) interior_cone = true;
    return {count_coxeter(d), interior_chamber && interior_cone};
}

FiberReport full_report(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    FiberReport rep;
    rep.newton = newton_point(d, g);
    rep.certified = g.input_validated();
    if (!g.input_validated())
        rep.warnings.push_back("abstract input accepted with an ultrametric violation");
    rep.nonempty = is_nonempty(d, g, lam);
    if (!rep.nonempty) return rep;
    // a nonempty report needs the honest coset parameter
    require_lambda(d, lam);

    rep.mu_star = smallest_integral_approximation(d, rep.newton);
    Rat dv = discriminant_valuation(d, g);
    rep.d = dv;
    if (!is_integer(dv))
        rep.warnings.push_back("discriminant valuation is not an integer; "
                               "the abstract descriptor is unrealizable over F");
    rep.r = r_gamma(d, g);
    long cv = c_gamma(d, g);
    rep.c = cv;
    rep.d_lambda = twisted_discriminant(d, g, lam);
    rep.dim_regular = dimension_regular_locus(d, g, lam);
    // For split gamma the total dimension is the theorem value
    // <rho, lambda> + d/2. For ramified descriptors full equidimensionality
    // comes from the companion work, whose formula equals dim_regular.
    if (g.is_concrete()) {
        rep.dim_total = d.pair(d.rho(), lam) + dv / 2;
        rep.dim_total_tag = ProvenanceTag::THEOREM;
    } else {
        rep.dim_total = *rep.dim_regular;
        rep.dim_total_tag = ProvenanceTag::COMPANION;
    }
    if (!is_integer(*rep.dim_regular) || !is_integer(*rep.dim_total))
        rep.warnings.push_back("non-integer dimension value; "
                               "no realizable gamma produces this report");
    OrbitCount oc = orbit_count(d, g, lam);
    rep.orbit_count = oc.count;
    rep.orbit_tag = oc.tag;
    RegularBound rb = regular_orbit_bound(d, g, lam);
    rep.regular_orbit_bound = rb.bound;
    rep.regular_bound_exact = rb.exact;
    rep.zero_dimensional = (*rep.d_lambda == 0);
    // report-level consistency
    if (g.is_concrete() && *rep.dim_total != *rep.dim_regular + Rat(cv) / 2)
        fail(ErrorCode::Internal, "dimension fields inconsistent");
    if (!g.is_concrete() && *rep.dim_total != *rep.dim_regular)
        fail(ErrorCode::Internal, "companion dimension must equal dim_regular");
    if (*rep.zero_dimensional && !(rep.newton == lam))
        fail(ErrorCode::Internal, "zero-dimensional report with nu != lambda");
    if (rb.exact && oc.count < rb.bound)
        fail(ErrorCode::Internal, "orbit count below the exact regular bound");
    return rep;
}

LowerBoundReport verify_lower_bound(const RootDatum& d, long radius, bool keep_rows,
                                    bool cross_check_kostant) {
    if (d.semisimple_rank() > 3)
        fail(ErrorCode::RankTooLarge, "verify_lower_bound supports semisimple rank <= 3");
    if (radius < 1 || radius > 5)
        fail(ErrorCode::MalformedSpec, "verify_lower_bound radius must be in 1..5");
    const size_t r = d.semisimple_rank();
    const IMat dual = d.dual_cartan();
    WeightEngine engine(dual);
    LowerBoundReport rep;
    rep.bound = count_coxeter(d);
    rep.min_mult = 0;

    IVec lam(r, 1);
    if (r == 0) return rep;
    while (true) {
        // chamber-interior lambda with fundamental coefficients <= radius
        auto table = engine.freudenthal_table(lam);
        IVec low = engine.lowest_weight(lam);
        IVec cmax = *engine.root_coeffs_of_diff(lam, low);
        bool any_c = true;
        for (long m : cmax)
            if (m < 1) any_c = false;
        if (any_c) {
            IVec c(r, 1);
            while (true) {
                IVec mu = lam;
                for (size_t k = 0; k < r; ++k)
                    for (size_t j = 0; j < r; ++j) mu[j] -= c[k] * dual[j][k];
                if (engine.is_dominant(mu)) {
                    auto it = table.find(mu);
                    long mult = it == table.end() ? 0 : it->second;
                    if (cross_check_kostant) {
                        long km = engine.kostant_multiplicity(lam, mu);
                        if (km != mult)
                            fail(ErrorCode::Internal,
                                 "freudenthal/kostant disagree inside the lower-bound scan");
                    }
                    bool ok = mult >= rep.bound;
                    LowerBoundRow row{lam, mu, mult, ok};
                    ++rep.pairs_checked;
                    if (!ok) rep.failures.push_back(row);
                    if (keep_rows) rep.rows.push_back(row);
                    if (!rep.min_pair || mult < rep.min_mult) {
                        rep.min_mult = mult;
                        rep.min_pair = std::make_pair(lam, mu);
                    }
                }
                size_t pos = 0;
                while (pos < r && c[pos] == cmax[pos]) {
                    c[pos] = 1;
                    ++pos;
                }
                if (pos == r) break;
                ++c[pos];
            }
        }
        size_t pos = 0;
        while (pos < r && lam[pos] == radius) {
            lam[pos] = 1;
            ++pos;
        }
        if (pos == r) break;
        ++lam[pos];
    }
    return rep;
}

}  // namespace springer
