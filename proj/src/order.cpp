#include "springer/order.hpp"

#include <algorithm>

#include "springer/errors.hpp"
#include "springer/multiplicity.hpp"

namespace springer {

namespace {

void require_integral_dominant(const RootDatum& d, const CoweightQ& lam, const char* who) {
    if (!d.is_integral(lam))
        fail(ErrorCode::NotIntegral, std::string(who) + " needs an integral coweight");
    if (!d.is_dominant(lam))
        fail(ErrorCode::MalformedSpec, std::string(who) + " needs a dominant coweight");
}

}  // namespace

bool leq_Q(const RootDatum& d, const CoweightQ& nu, const CoweightQ& lam) {
    CoweightQ diff = lam - nu;
    for (const auto& z : d.central_coords(diff))
        if (z != 0) return false;
    for (const auto& t : d.coroot_coords(diff))
        if (t < 0) return false;
    return true;
}

bool leq_int(const RootDatum& d, const CoweightQ& mu, const CoweightQ& lam) {
    if (!d.is_integral(mu) || !d.is_integral(lam))
        fail(ErrorCode::NotIntegral, "leq_int needs integral coweights");
    CoweightQ diff = lam - mu;
    for (const auto& z : d.central_coords(diff))
        if (z != 0) return false;
    for (const auto& t : d.coroot_coords(diff))
        if (t < 0 || !is_integer(t)) return false;
    return true;
}

CoweightQ meet(const RootDatum& d, const CoweightQ& lam1, const CoweightQ& lam2) {
    require_integral_dominant(d, lam1, "meet");
    require_integral_dominant(d, lam2, "meet");
    if (!d.det_class_equal(lam1, lam2))
        fail(ErrorCode::DetClassMismatch, "meet needs arguments in the same det class");
    RatVec c = d.coroot_coords(lam1 - lam2);
    // lam1 - lam2 = beta1 - beta2 with beta1, beta2 supported on disjoint
    // sets of simple coroots; mu = lam1 - beta1 = lam2 - beta2.
    CoweightQ mu = lam1;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] > 0) mu = mu - (c[i] * d.simple_coroot(i));
    }
    if (!d.is_dominant(mu)) fail(ErrorCode::Internal, "meet produced a non-dominant coweight");
    if (!leq_int(d, mu, lam1) || !leq_int(d, mu, lam2))
        fail(ErrorCode::Internal, "meet not below its arguments");
    return mu;
}

IntegralApproximation smallest_integral_approximation_full(const RootDatum& d,
                                                           const CoweightQ& nu) {
    if (!d.is_dominant(nu))
        fail(ErrorCode::MalformedSpec, "smallest_integral_approximation needs dominant nu");
    if (!d.central_integral(nu))
        fail(ErrorCode::NoIntegralDominator,
             "central component of nu is not integral; no integral coweight dominates it");
    const size_t r = d.semisimple_rank();
    CoweightQ base = d.central_base_point(nu);
    RatVec t = d.coroot_coords(nu - base);

    // integer box [ceil(t), ceil(t) + K * (coroot coefficients of 2 rho^vee)]
    IVec g0(r), kappa(r, 0);
    for (size_t i = 0; i < r; ++i) g0[i] = rat_ceil_long(t[i]);
    for (const auto& pr : d.positive_roots())
        for (size_t i = 0; i < r; ++i) kappa[i] += pr.coroot_coeffs[i];

    auto candidate = [&](const IVec& g) {
        CoweightQ mu = base;
        for (size_t i = 0; i < r; ++i)
            if (g[i] != 0) mu = mu + (Rat(g[i]) * d.simple_coroot(i));
        return mu;
    };
    // <alpha_j, 2 rho^vee> = 2, so K steps of kappa fix any dominance deficit
    CoweightQ mu0 = candidate(g0);
    long K = 0;
    for (size_t j = 0; j < r; ++j) {
        Rat deficit = -mu0.coords[j];
        if (deficit > 0) K = std::max(K, rat_ceil_long(deficit / 2));
    }
    IVec hi(r);
    for (size_t i = 0; i < r; ++i) hi[i] = g0[i] + K * kappa[i];

    std::vector<std::pair<IVec, CoweightQ>> candidates;
    IVec g = g0;
    while (true) {
        CoweightQ mu = candidate(g);
        if (d.is_dominant(mu)) candidates.emplace_back(g, mu);
        size_t pos = 0;
        while (pos < r && g[pos] == hi[pos]) {
            g[pos] = g0[pos];
            ++pos;
        }
        if (pos == r) break;
        ++g[pos];
    }
    if (r == 0) candidates.emplace_back(IVec{}, base);
    if (candidates.empty()) fail(ErrorCode::Internal, "no dominant candidate in the box");

    // componentwise-minimal candidates
    std::vector<std::pair<IVec, CoweightQ>> minimal;
    for (const auto& a : candidates) {
        bool dominated = false;
        for (const auto& b : candidates) {
            if (b.first == a.first) continue;
            bool below = true;
            for (size_t i = 0; i < r; ++i)
                if (b.first[i] > a.first[i]) below = false;
            if (below) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(a);
    }
    CoweightQ mu = minimal[0].second;
    for (size_t i = 1; i < minimal.size(); ++i) mu = meet(d, mu, minimal[i].second);
    // executable uniqueness: the fold is itself a dominating candidate and
    // sits below every candidate found
    if (!d.is_dominant(mu) || !d.is_integral(mu) || !leq_Q(d, nu, mu))
        fail(ErrorCode::Internal, "meet-fold left the candidate set");
    for (const auto& cand : candidates)
        if (!leq_Q(d, mu, cand.second))
            fail(ErrorCode::Internal, "smallest integral approximation is not unique");

    IntegralApproximation out;
    out.mu = mu;
    for (const auto& m : minimal) out.minimal_candidates.push_back(m.second);
    std::sort(out.minimal_candidates.begin(), out.minimal_candidates.end());
    return out;
}

CoweightQ smallest_integral_approximation(const RootDatum& d, const CoweightQ& nu) {
    return smallest_integral_approximation_full(d, nu).mu;
}

std::vector<CoweightQ> largest_integral_minorants(const RootDatum& d, const CoweightQ& nu) {
    if (!d.is_dominant(nu))
        fail(ErrorCode::MalformedSpec, "largest_integral_minorants needs dominant nu");
    std::vector<CoweightQ> out;
    if (!d.central_integral(nu)) return out;
    const size_t r = d.semisimple_rank();
    CoweightQ base = d.central_base_point(nu);
    RatVec t = d.coroot_coords(nu - base);
    RatVec tb = d.coroot_coords(base);
    // candidates mu = base + sum g_i alpha_i^vee with g <= floor(t); dominant
    // coweights have nonnegative coroot coordinates, so g >= -coroot(base)
    IVec lo(r), hi(r);
    for (size_t i = 0; i < r; ++i) {
        hi[i] = rat_floor_long(t[i]);
        lo[i] = rat_ceil_long(-tb[i]);
        if (lo[i] > hi[i]) return out;
    }
    std::vector<std::pair<IVec, CoweightQ>> candidates;
    IVec g = lo;
    while (true) {
        CoweightQ mu = base;
        for (size_t i = 0; i < r; ++i)
            if (g[i] != 0) mu = mu + (Rat(g[i]) * d.simple_coroot(i));
        if (d.is_dominant(mu)) candidates.emplace_back(g, mu);
        size_t pos = 0;
        while (pos < r && g[pos] == hi[pos]) {
            g[pos] = lo[pos];
            ++pos;
        }
        if (pos == r) break;
        ++g[pos];
    }
    for (const auto& a : candidates) {
        bool dominated = false;
        for (const auto& b : candidates) {
            if (b.first == a.first) continue;
            bool above = true;
            for (size_t i = 0; i < r; ++i)
                if (b.first[i] < a.first[i]) above = false;
            if (above) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(a.second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_polytope(const RootDatum& d, const CoweightQ& lam, const CoweightQ& nu) {
    require_integral_dominant(d, lam, "in_polytope");
    return d.is_dominant(nu) && leq_Q(d, nu, lam);
}

std::vector<CoweightQ> dominated_dominants(const RootDatum& d, const CoweightQ& lam) {
    require_integral_dominant(d, lam, "dominated_dominants");
    const size_t r = d.semisimple_rank();
    CoweightQ low = d.apply(d.longest_element(), lam);
    RatVec cmax_q = d.coroot_coords(lam - low);
    IVec cmax(r);
    for (size_t i = 0; i < r; ++i) {
        if (!is_integer(cmax_q[i]) || cmax_q[i] < 0)
            fail(ErrorCode::Internal, "w0(lam) not integrally below lam");
        cmax[i] = rat_to_long(cmax_q[i]);
    }
    std::vector<CoweightQ> out;
    IVec c(r, 0);
    while (true) {
        CoweightQ mu = lam;
        for (size_t i = 0; i < r; ++i)
            if (c[i] != 0) mu = mu - (Rat(c[i]) * d.simple_coroot(i));
        if (d.is_dominant(mu)) out.push_back(mu);
        size_t pos = 0;
        while (pos < r && c[pos] == cmax[pos]) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
        ++c[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_open_stratum(const RootDatum& d, const CoweightQ& lam, const CoweightQ& nu) {
    if (!in_polytope(d, lam, nu)) return false;
    // Any dominant integral mu < lam whose polytope contains nu satisfies
    // nu <=_Q mu <= lam, so it is enough to search the integer box between
    // the coroot coordinates of nu and of lam.
    const size_t r = d.semisimple_rank();
    CoweightQ base = d.central_base_point(nu);
    RatVec t = d.coroot_coords(nu - base);
    RatVec tl = d.coroot_coords(lam - base);
    IVec g0(r), gl(r);
    for (size_t i = 0; i < r; ++i) {
        g0[i] = rat_ceil_long(t[i]);
        if (!is_integer(tl[i]))
            fail(ErrorCode::Internal, "lambda not integral over the central base point");
        gl[i] = rat_to_long(tl[i]);
    }
    if (r == 0) return true;
    IVec g = g0;
    while (true) {
        if (g != gl) {
            CoweightQ mu = base;
            for (size_t i = 0; i < r; ++i)
                if (g[i] != 0) mu = mu + (Rat(g[i]) * d.simple_coroot(i));
            if (d.is_dominant(mu)) return false;
        }
        size_t pos = 0;
        while (pos < r && g[pos] == gl[pos]) {
            g[pos] = g0[pos];
            ++pos;
        }
        if (pos == r) break;
        ++g[pos];
    }
    return true;
}

bool steinberg_contains(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    if (!g.is_concrete())
        fail(ErrorCode::MalformedSpec, "Steinberg membership needs a concrete element");
    require_integral_dominant(d, lam, "steinberg_contains");
    if (d.semisimple_rank() > 3)
        fail(ErrorCode::RankTooLarge,
             "Steinberg membership needs fundamental weight systems; semisimple rank <= 3 only");
    // det(gamma) must match det(w^lam) up to units
    if (!d.det_class_equal(g.concrete_data().mu, lam)) return false;
    const WeylElement& w0 = d.longest_element();
    CoweightQ w0lam = d.apply(w0, lam);
    for (size_t i = 0; i < d.semisimple_rank(); ++i) {
        Rat bound = d.pair(d.fundamental_weight(i), w0lam);
        LaurentSeries trace;
        bool first = true;
        for (const auto& [chi, mult] : fundamental_weight_system(d, i)) {
            LaurentSeries term = evaluate_character(d, g, chi).scaled(Rat(mult));
            trace = first ? term : trace + term;
            first = false;
        }
        auto v = trace.valuation();
        if (v) {
            if (Rat(*v) < bound) return false;
        } else if (!trace.is_exact_zero() && Rat(trace.trunc()) < bound) {
            fail(ErrorCode::InconclusiveTruncation,
                 "trace valuation undetermined below truncation order " +
                     std::to_string(trace.trunc()) + " (bound " + rat_to_string(bound) + ")");
        }
        // a trace that is exactly zero, or zero to an order at or past the
        // bound, satisfies the inequality
    }
    return true;
}

bool steinberg_open_stratum(const RootDatum& d, const TorusElement& g, const CoweightQ& lam) {
    if (!steinberg_contains(d, g, lam)) return false;
    for (const CoweightQ& mu : dominated_dominants(d, lam)) {
        if (mu == lam) continue;
        if (steinberg_contains(d, g, mu)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enhanced coweights

EnhancedCoweight lambda_plus(const RootDatum& d, const CoweightQ& lam) {
    require_integral_dominant(d, lam, "lambda_plus");
    const size_t r = d.semisimple_rank();
    CoweightQ w0lam = d.apply(d.longest_element(), lam);
    EnhancedCoweight out;
    out.nu1.assign(r, Rat(0));
    out.nu2.assign(r, Rat(0));
    for (size_t i = 0; i < r; ++i) {
        out.nu1[i] = -w0lam.coords[i];
        out.nu2[i] = w0lam.coords[i];
    }
    if (!enhanced_integral(d, out))
        fail(ErrorCode::Internal, "lambda_plus output violates the lattice condition");
    return out;
}

bool enhanced_integral(const RootDatum& d, const EnhancedCoweight& v) {
    const size_t r = d.semisimple_rank();
    if (v.nu1.size() != r || v.nu2.size() != r)
        fail(ErrorCode::DimensionMismatch, "enhanced coweight has wrong rank");
    for (size_t i = 0; i < r; ++i)
        if (!is_integer(v.nu1[i]) || !is_integer(v.nu2[i])) return false;
    // nu1 + nu2 must be in the coroot lattice
    CoweightQ sum = d.zero_coweight();
    for (size_t i = 0; i < r; ++i) sum.coords[i] = v.nu1[i] + v.nu2[i];
    for (const auto& t : d.coroot_coords(sum))
        if (!is_integer(t)) return false;
    return true;
}

bool enhanced_dominant(const RootDatum& d, const EnhancedCoweight& v) {
    (void)d;
    for (const auto& x : v.nu1)
        if (x < 0) return false;
    return true;
}

namespace {

CoweightQ embed_adjoint(const RootDatum& d, const RatVec& x) {
    CoweightQ c = d.zero_coweight();
    for (size_t i = 0; i < x.size(); ++i) c.coords[i] = x[i];
    return c;
}

}  // namespace

bool enhanced_leq_cone(const RootDatum& d, const EnhancedCoweight& mu_plus,
                       const EnhancedCoweight& lam_plus) {
    if (mu_plus.nu1 != lam_plus.nu1) return false;
    CoweightQ diff = embed_adjoint(d, lam_plus.nu2) - embed_adjoint(d, mu_plus.nu2);
    for (const auto& t : d.coroot_coords(diff))
        if (t < 0) return false;
    return true;
}

bool enhanced_leq(const RootDatum& d, const EnhancedCoweight& mu_plus,
                  const EnhancedCoweight& lam_plus) {
    if (!enhanced_dominant(d, mu_plus) || !enhanced_dominant(d, lam_plus))
        fail(ErrorCode::MalformedSpec, "enhanced_leq needs dominant enhanced coweights");
    if (mu_plus.nu1 != lam_plus.nu1)
        fail(ErrorCode::AbelianizationMismatch,
             "enhanced coweights with different abelianization components are incomparable");
    const size_t r = d.semisimple_rank();
    const WeylElement& w0 = d.longest_element();
    CoweightQ mu1 = embed_adjoint(d, mu_plus.nu1), mu2 = embed_adjoint(d, mu_plus.nu2);
    CoweightQ la1 = embed_adjoint(d, lam_plus.nu1), la2 = embed_adjoint(d, lam_plus.nu2);
    bool ok = true;
    for (size_t i = 0; i < r && ok; ++i) {
        // omega_i^+ = (omega_i, omega_i) on the derived group; its w0 image
        // is (omega_i, w0(omega_i))
        WeightQ omega = d.zero_weight();
        omega.coords[i] = 1;
        WeightQ w0_omega = d.apply(w0, omega);
        Rat lhs = d.pair(omega, mu1) + d.pair(w0_omega, mu2);
        Rat rhs = d.pair(omega, la1) + d.pair(w0_omega, la2);
        if (lhs < rhs) ok = false;
    }
    bool cone = enhanced_leq_cone(d, mu_plus, lam_plus);
    if (ok != cone)
        fail(ErrorCode::Internal, "enhanced dominance routes disagree");
    return ok;
}

}  // namespace springer
