#include "springer/torus.hpp"

#include "springer/errors.hpp"

namespace springer {

Rat ValuationProfile::sum_over_zero_pairing(const RootDatum& d, const CoweightQ& nu) const {
    Rat acc(0);
    for (size_t a = 0; a < values.size(); ++a)
        if (d.pair_root(a, nu) == 0) acc += values[a];
    return acc;
}

Rat ValuationProfile::sum_all() const {
    Rat acc(0);
    for (const auto& v : values) acc += v;
    return acc;
}

TorusElement TorusElement::concrete(const RootDatum& datum, const CoweightQ& mu,
                                    std::vector<LaurentSeries> units) {
    if (!datum.is_integral(mu))
        fail(ErrorCode::NotIntegral, "concrete torus element needs integral mu");
    if (units.size() != datum.rank())
        fail(ErrorCode::DimensionMismatch,
             "expected " + std::to_string(datum.rank()) + " unit coordinates, got " +
                 std::to_string(units.size()));
    for (const auto& u : units) {
        auto v = u.valuation();
        if (!v)
            fail(ErrorCode::MalformedSpec,
                 "unit coordinate has no visible nonzero coefficient (valuation "
                 "inconclusive)");
        if (*v != 0)
            fail(ErrorCode::MalformedSpec,
                 "unit coordinate must have valuation 0, got " + std::to_string(*v));
    }
    TorusElement g;
    g.data_ = Concrete{mu, std::move(units)};
    return g;
}

TorusElement TorusElement::abstract_element(const RootDatum& datum, long e,
                                            const WeylElement& twist, const CoweightQ& nu,
                                            const std::map<size_t, Rat>& profile,
                                            bool allow_ultrametric_violation) {
    if (e < 1) fail(ErrorCode::MalformedSpec, "ramification degree must be >= 1");
    if (datum.element_order(twist) != static_cast<size_t>(e))
        fail(ErrorCode::MalformedSpec, "w_twist must have order e = " + std::to_string(e));
    if (!datum.is_dominant(nu))
        fail(ErrorCode::MalformedSpec, "abstract Newton point must be dominant");
    if (!datum.is_integral(Rat(e) * nu))
        fail(ErrorCode::NotIntegral, "e * nu must lie in the coweight lattice");
    const auto& roots = datum.positive_roots();
    for (const auto& [idx, v] : profile) {
        if (idx >= roots.size())
            fail(ErrorCode::MalformedSpec, "profile key " + std::to_string(idx) +
                                               " is not a positive-root index");
        if (v < 0) fail(ErrorCode::MalformedSpec, "profile values must be nonnegative");
        if (!is_integer(v * Rat(e)))
            fail(ErrorCode::MalformedSpec,
                 "profile value " + rat_to_string(v) + " has denominator not dividing e");
        if (v != 0 && datum.pair_root(idx, nu) != 0)
            fail(ErrorCode::MalformedSpec,
                 "profile supported on a root with nonzero Newton pairing");
    }
    // ultrametric consistency on the zero-pairing domain
    bool ultrametric_ok = true;
    auto value_at = [&](size_t idx) {
        auto it = profile.find(idx);
        return it == profile.end() ? Rat(0) : it->second;
    };
    for (size_t a = 0; a < roots.size() && ultrametric_ok; ++a) {
        if (datum.pair_root(a, nu) != 0) continue;
        for (size_t b = a; b < roots.size() && ultrametric_ok; ++b) {
            if (datum.pair_root(b, nu) != 0) continue;
            IVec sum = roots[a].root_coeffs;
            for (size_t j = 0; j < sum.size(); ++j) sum[j] += roots[b].root_coeffs[j];
            auto c = datum.find_positive_root(sum);
            if (!c) continue;
            Rat lo = std::min(value_at(a), value_at(b));
            if (value_at(*c) < lo) ultrametric_ok = false;
        }
    }
    if (!ultrametric_ok && !allow_ultrametric_violation)
        fail(ErrorCode::MalformedSpec,
             "valuation profile violates the ultrametric inequality (pass the override "
             "to accept unvalidated input)");
    TorusElement g;
    g.data_ = Abstract{e, twist, nu, profile};
    g.validated_ = ultrametric_ok;
    return g;
}

LaurentSeries evaluate_character(const RootDatum& datum, const TorusElement& g,
                                 const WeightQ& chi) {
    if (!g.is_concrete())
        fail(ErrorCode::Internal, "evaluate_character needs a concrete element");
    const auto& data = g.concrete_data();
    RatVec m = datum.weight_lattice_coords(chi);
    Rat e = datum.pair(chi, data.mu);
    if (!is_integer(e))
        fail(ErrorCode::NotIntegral, "character pairs fractionally with mu");
    LaurentSeries acc = LaurentSeries::monomial(rat_to_long(e));
    for (size_t k = 0; k < m.size(); ++k) {
        if (!is_integer(m[k]))
            fail(ErrorCode::NotIntegral, "character is not in the weight lattice");
        long mk = rat_to_long(m[k]);
        if (mk == 0) continue;
        acc = acc * data.units[k].power(mk);
    }
    return acc;
}

CoweightQ newton_point(const RootDatum& datum, const TorusElement& g) {
    if (g.is_concrete()) return datum.dominant_representative(g.concrete_data().mu).first;
    return g.abstract_data().nu;
}

ValuationProfile valuation_profile(const RootDatum& datum, const TorusElement& g) {
    const auto& roots = datum.positive_roots();
    ValuationProfile out;
    out.values.assign(roots.size(), Rat(0));
    if (!g.is_concrete()) {
        for (const auto& [idx, v] : g.abstract_data().profile) out.values[idx] = v;
        return out;
    }
    auto [nu, w] = datum.dominant_representative(g.concrete_data().mu);
    WeylElement w_inv = datum.inverse_element(w);
    for (size_t a = 0; a < roots.size(); ++a) {
        Rat p = datum.pair_root(a, nu);
        if (p > 0) continue;  // alpha(gamma') in the maximal ideal + 1 unit: v = 0
        if (p < 0) fail(ErrorCode::Internal, "positive root pairs negatively with Newton point");
        // alpha(w gamma w^{-1}) = (w^{-1} alpha)(gamma)
        WeightQ chi = datum.apply(w_inv, roots[a].root);
        LaurentSeries s = evaluate_character(datum, g, chi) - LaurentSeries::one();
        if (s.is_exact_zero())
            fail(ErrorCode::NotRegularSemisimple,
                 "alpha(gamma) = 1 identically on positive root #" + std::to_string(a));
        auto v = s.valuation();
        if (!v)
            fail(ErrorCode::InconclusiveTruncation,
                 "val(alpha(gamma)-1) not visible below truncation order " +
                     std::to_string(s.trunc()) + " on root #" + std::to_string(a) +
                     "; retry with higher-precision units");
        if (*v < 0) fail(ErrorCode::Internal, "unit character with negative valuation");
        out.values[a] = *v;
    }
    return out;
}

Rat discriminant_direct(const RootDatum& datum, const TorusElement& g) {
    const auto& roots = datum.positive_roots();
    if (g.is_concrete()) {
        // sum of val(1 - beta(gamma)) over all roots beta, straight off the
        // series arithmetic, no Newton-point bookkeeping
        Rat acc(0);
        for (size_t a = 0; a < roots.size(); ++a) {
            for (int sign : {+1, -1}) {
                WeightQ chi = sign > 0 ? roots[a].root : Rat(-1) * roots[a].root;
                LaurentSeries s = LaurentSeries::one() - evaluate_character(datum, g, chi);
                if (s.is_exact_zero())
                    fail(ErrorCode::NotRegularSemisimple,
                         "1 - alpha(gamma) vanishes identically on root #" + std::to_string(a));
                auto v = s.valuation();
                if (!v)
                    fail(ErrorCode::InconclusiveTruncation,
                         "val(1 - alpha(gamma)) not visible below truncation order " +
                             std::to_string(s.trunc()));
                acc += Rat(*v);
            }
        }
        return acc;
    }
    // abstract: the Newton-split sum over the full root system, with
    // v_{-alpha} = v_alpha on the zero-pairing part
    const CoweightQ nu = g.abstract_data().nu;
    ValuationProfile prof = valuation_profile(datum, g);
    Rat acc(0);
    for (size_t a = 0; a < roots.size(); ++a) {
        Rat p = datum.pair_root(a, nu);
        if (p == 0)
            acc += Rat(2) * prof.values[a];
        else
            acc += -p;  // the negative root -alpha contributes <-alpha, nu> < 0
    }
    return acc;
}

Rat discriminant_valuation(const RootDatum& datum, const TorusElement& g) {
    CoweightQ nu = newton_point(datum, g);
    ValuationProfile prof = valuation_profile(datum, g);
    Rat two_rho_nu = Rat(2) * datum.pair(datum.rho(), nu);
    Rat d = Rat(2) * prof.sum_over_zero_pairing(datum, nu) - two_rho_nu;
    Rat d_direct = discriminant_direct(datum, g);
    if (d != d_direct)
        fail(ErrorCode::Internal, "discriminant routes disagree: " + rat_to_string(d) +
                                      " vs " + rat_to_string(d_direct));
    return d;
}

Rat r_gamma(const RootDatum& datum, const TorusElement& g) {
    CoweightQ nu = newton_point(datum, g);
    ValuationProfile prof = valuation_profile(datum, g);
    Rat r1 = prof.sum_all();
    Rat r2 = discriminant_valuation(datum, g) / 2 + datum.pair(datum.rho(), nu);
    if (r1 != r2)
        fail(ErrorCode::Internal,
             "r(gamma) identity broke: " + rat_to_string(r1) + " vs " + rat_to_string(r2));
    return r1;
}

long c_gamma(const RootDatum& datum, const TorusElement& g) {
    if (g.is_concrete()) return 0;
    const size_t r = datum.semisimple_rank();
    const IMat& m = g.abstract_data().twist.mat;
    RatMat shifted(r, RatVec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) shifted[i][j] = Rat(m[i][j]) - Rat(i == j ? 1 : 0);
    // the twist fixes the central block, so only the semisimple block counts
    return static_cast<long>(rat_mat_rank(shifted));
}

long c_gamma_by_trace(const RootDatum& datum, const TorusElement& g) {
    if (g.is_concrete()) return 0;
    const size_t r = datum.semisimple_rank();
    const auto& data = g.abstract_data();
    RatMat avg(r, RatVec(r, Rat(0)));
    IMat power = int_identity(r);
    for (long k = 0; k < data.e; ++k) {
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) avg[i][j] += Rat(power[i][j]) / Rat(data.e);
        power = int_mat_mul(power, data.twist.mat);
    }
    Rat fixed_dim = rat_mat_trace(avg);
    if (!is_integer(fixed_dim)) fail(ErrorCode::Internal, "projector trace not integral");
    return static_cast<long>(r) - rat_to_long(fixed_dim);
}

}  // namespace springer
