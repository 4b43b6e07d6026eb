#include <random>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/multiplicity.hpp"
#include "springer/springer.hpp"
#include "springer/verification.hpp"

using namespace springer;

namespace {

TorusElement diag_pi_1(const RootDatum& gl2) {
    return TorusElement::concrete(gl2, gl2.coweight_from_lattice({Rat(1), Rat(0)}),
                                  {LaurentSeries::one(), LaurentSeries::one()});
}

TorusElement gl2_units(const RootDatum& gl2, long v) {
    // diag(t1, t2) with val(t1 - t2) = v
    RatVec coeffs(static_cast<size_t>(v) + 1, Rat(0));
    coeffs[0] = 1;
    coeffs[static_cast<size_t>(v)] += 1;
    return TorusElement::concrete(gl2, gl2.zero_coweight(),
                                  {LaurentSeries(0, coeffs), LaurentSeries::one()});
}

}  // namespace

TEST_CASE("nonemptiness") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    TorusElement g = diag_pi_1(gl2);
    CHECK(is_nonempty(gl2, g, gl2.coweight_from_lattice({Rat(1), Rat(0)})));
    CHECK(!is_nonempty(gl2, g, gl2.coweight_from_lattice({Rat(0), Rat(1)})));

    RootDatum sl3 = RootDatum::from_spec("A2");
    TorusElement g3 = TorusElement::concrete(
        sl3, sl3.zero_coweight(),
        {LaurentSeries(0, {Rat(1), Rat(2)}), LaurentSeries(0, {Rat(1), Rat(1)})});
    CHECK(is_nonempty(sl3, g3, sl3.coweight_from_lattice({Rat(1), Rat(1)})));
}

TEST_CASE("monotonicity of nonemptiness") {
    std::mt19937_64 rng(51);
    RootDatum gl2 = RootDatum::from_spec("GL2");
    for (int i = 0; i < 10; ++i) {
        TorusElement g = random_concrete_element(gl2, rng, 2);
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= a; ++b) {
                CoweightQ lam = gl2.coweight_from_lattice({Rat(a), Rat(b)});
                if (!is_nonempty(gl2, g, lam)) continue;
                for (long k = 1; k <= 2; ++k) {
                    CoweightQ bigger =
                        gl2.coweight_from_lattice({Rat(a + k), Rat(b - k)});
                    CHECK(is_nonempty(gl2, g, bigger));
                }
            }
    }
}

TEST_CASE("dimension formulas") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    CoweightQ lam10 = gl2.coweight_from_lattice({Rat(1), Rat(0)});
    CoweightQ alpha_vee = gl2.coweight_from_lattice({Rat(1), Rat(-1)});

    CHECK(dimension_unramified(gl2, diag_pi_1(gl2), lam10) == 0);
    CHECK(dimension_unramified(gl2, gl2_units(gl2, 0), alpha_vee) == 1);
    CHECK(dimension_unramified(gl2, gl2_units(gl2, 2), alpha_vee) == 3);

    // MV-dimension cross-check: <rho, lam + mu> + r(gamma) - <2 rho, mu>
    for (long v : {0L, 1L, 2L}) {
        TorusElement g = gl2_units(gl2, v);
        CoweightQ mu = newton_point(gl2, g);
        Rat lhs = dimension_unramified(gl2, g, alpha_vee);
        Rat rhs = gl2.pair(gl2.rho(), alpha_vee + mu) + r_gamma(gl2, g) -
                  Rat(2) * gl2.pair(gl2.rho(), mu);
        CHECK(lhs == rhs);
    }

    // concrete elements have c = 0, so both dimension formulas agree
    std::mt19937_64 rng(53);
    for (const char* type : {"GL2", "A2"}) {
        RootDatum d = RootDatum::from_spec(type);
        for (int i = 0; i < 5; ++i) {
            TorusElement g = random_concrete_element(d, rng, 1);
            CoweightQ nu = newton_point(d, g);
            CoweightQ lam = smallest_integral_approximation(d, nu);
            CHECK(dimension_regular_locus(d, g, lam) == dimension_unramified(d, g, lam));
        }
    }

    CHECK_THROWS_AS(dimension_unramified(gl2, diag_pi_1(gl2),
                                         gl2.coweight_from_lattice({Rat(0), Rat(1)})),
                    SpringerError);
}

TEST_CASE("twisted discriminant") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    CHECK(twisted_discriminant(gl2, diag_pi_1(gl2),
                               gl2.coweight_from_lattice({Rat(1), Rat(0)})) == 0);
    // nu = 0, profile {2}, lambda = alpha^vee: d_lambda = 4 + 2 = 6
    CHECK(twisted_discriminant(gl2, gl2_units(gl2, 2),
                               gl2.coweight_from_lattice({Rat(1), Rat(-1)})) == 6);
    // nu = lambda with zero profile: 0
    CHECK(twisted_discriminant(gl2, gl2_units(gl2, 0), gl2.zero_coweight()) == 0);
}

TEST_CASE("zero dimensional reports") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    ZeroDimInfo info = zero_dim_report(gl2, diag_pi_1(gl2),
                                       gl2.coweight_from_lattice({Rat(1), Rat(0)}));
    CHECK(info.dim == 0);
    CHECK(info.torsor);
    CHECK(info.count == 1);

    // SL2 with nu = lambda = alpha^vee and zero profile
    RootDatum sl2 = RootDatum::from_spec("A1");
    TorusElement g = TorusElement::concrete(sl2, sl2.coweight_from_lattice({Rat(1)}),
                                            {LaurentSeries::one()});
    ZeroDimInfo info2 = zero_dim_report(sl2, g, sl2.coweight_from_lattice({Rat(1)}));
    CHECK(info2.count == 1);

    // nonzero profile: NotZeroTwisted
    TorusElement g2 = TorusElement::concrete(
        gl2, gl2.zero_coweight(),
        {LaurentSeries(0, {Rat(1), Rat(1)}), LaurentSeries::one()});
    try {
        zero_dim_report(gl2, g2, gl2.zero_coweight());
        CHECK(false);
    } catch (const SpringerError& e) {
        CHECK(e.code() == ErrorCode::NotZeroTwisted);
    }

    // an abstract descriptor with e > 1 forcing d_lambda = 0 is flagged as
    // unrealizable (a rigid fiber forces an unramified class)
    CoweightQ diag = gl2.coweight_from_lattice({Rat(1), Rat(1)});
    TorusElement ab = TorusElement::abstract_element(gl2, 2, gl2.simple_reflection(0), diag, {});
    ZeroDimInfo info3 = zero_dim_report(gl2, ab, diag);
    CHECK(info3.count == 1);
    CHECK(!info3.warnings.empty());
}

TEST_CASE("zero twist three-way equivalence") {
    // d_lambda = 0 iff nu = lambda with a vanishing profile, on random inputs
    std::mt19937_64 rng(71);
    RootDatum gl2 = RootDatum::from_spec("GL2");
    for (int i = 0; i < 20; ++i) {
        TorusElement g = random_concrete_element(gl2, rng, 2);
        CoweightQ nu = newton_point(gl2, g);
        ValuationProfile prof = valuation_profile(gl2, g);
        bool zero_profile = true;
        for (const auto& v : prof.values)
            if (v != 0) zero_profile = false;
        CoweightQ lam = smallest_integral_approximation(gl2, nu);
        Rat dl = twisted_discriminant(gl2, g, lam);
        CHECK((dl == 0) == (nu == lam && zero_profile));
        if (dl == 0)
            CHECK_NOTHROW(zero_dim_report(gl2, g, lam));
        else
            CHECK_THROWS_AS(zero_dim_report(gl2, g, lam), SpringerError);
    }
}

TEST_CASE("orbit counts") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    OrbitCount oc = orbit_count(gl2, gl2_units(gl2, 0),
                                gl2.coweight_from_lattice({Rat(1), Rat(-1)}));
    CHECK(oc.count == 1);
    CHECK(oc.tag == ProvenanceTag::THEOREM);

    RootDatum sl3 = RootDatum::from_spec("A2");
    TorusElement g3 = TorusElement::concrete(
        sl3, sl3.zero_coweight(),
        {LaurentSeries(0, {Rat(1), Rat(2)}), LaurentSeries(0, {Rat(1), Rat(1)})});
    OrbitCount oc3 = orbit_count(sl3, g3, sl3.coweight_from_lattice({Rat(1), Rat(1)}));
    CHECK(oc3.count == 2);
    CHECK(oc3.tag == ProvenanceTag::THEOREM);

    // lambda = 0 on a unit element: one orbit
    OrbitCount oc0 = orbit_count(gl2, gl2_units(gl2, 1), gl2.zero_coweight());
    CHECK(oc0.count == 1);
    CHECK(oc0.tag == ProvenanceTag::THEOREM);

    // ramified: conjectural tag
    CoweightQ nu = gl2.coweight_from_lattice({rat_from_string("1/2"), rat_from_string("1/2")});
    TorusElement tw = TorusElement::abstract_element(gl2, 2, gl2.simple_reflection(0), nu, {});
    OrbitCount oct = orbit_count(gl2, tw, gl2.coweight_from_lattice({Rat(1), Rat(0)}));
    CHECK(oct.count == 1);
    CHECK(oct.tag == ProvenanceTag::CONJECTURAL);
}

TEST_CASE("regular orbit bound") {
    RootDatum a2 = RootDatum::from_spec("A2");
    TorusElement g = TorusElement::concrete(
        a2, a2.zero_coweight(),
        {LaurentSeries(0, {Rat(1), Rat(2)}), LaurentSeries(0, {Rat(1), Rat(1)})});
    // lambda = 2 theta^vee, mu* = 0: interior on both counts
    RegularBound rb = regular_orbit_bound(a2, g, a2.coweight_from_lattice({Rat(2), Rat(2)}));
    CHECK(rb.bound == 2);
    CHECK(rb.exact);
    // lambda = 0 sits on the chamber wall
    RegularBound rb0 = regular_orbit_bound(a2, g, a2.zero_coweight());
    CHECK(rb0.bound == 2);
    CHECK(!rb0.exact);

    RootDatum prod = RootDatum::from_spec("A1*A1");
    TorusElement gp = TorusElement::concrete(
        prod, prod.zero_coweight(),
        {LaurentSeries::constant(Rat(2)), LaurentSeries::constant(Rat(3))});
    RegularBound rbp = regular_orbit_bound(prod, gp, prod.zero_coweight());
    CHECK(rbp.bound == 1);

    // bound coherence: when exact, the orbit count is at least the bound
    std::mt19937_64 rng(59);
    for (int i = 0; i < 8; ++i) {
        TorusElement h = random_concrete_element(a2, rng, 1);
        CoweightQ mu_star = smallest_integral_approximation(a2, newton_point(a2, h));
        CoweightQ lam = mu_star + a2.coweight_from_lattice({Rat(2), Rat(2)});
        RegularBound b = regular_orbit_bound(a2, h, lam);
        OrbitCount oc = orbit_count(a2, h, lam);
        CHECK(oc.count >= 1);
        if (b.exact) CHECK(oc.count >= b.bound);
    }
}

TEST_CASE("full reports") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    FiberReport rep = full_report(gl2, diag_pi_1(gl2),
                                  gl2.coweight_from_lattice({Rat(1), Rat(0)}));
    CHECK(rep.nonempty);
    CHECK(*rep.d == -1);
    CHECK(*rep.r == 0);
    CHECK(*rep.c == 0);
    CHECK(*rep.d_lambda == 0);
    CHECK(*rep.dim_total == 0);
    CHECK(*rep.dim_total_tag == ProvenanceTag::THEOREM);
    CHECK(*rep.orbit_count == 1);
    CHECK(*rep.zero_dimensional);
    CHECK(rep.certified);

    FiberReport empty = full_report(gl2, diag_pi_1(gl2),
                                    gl2.coweight_from_lattice({Rat(0), Rat(1)}));
    CHECK(!empty.nonempty);
    CHECK(!empty.d.has_value());
    CHECK(!empty.orbit_count.has_value());

    // A2 adjoint fixture
    RootDatum a2 = RootDatum::from_spec("A2");
    TorusElement g3 = TorusElement::concrete(
        a2, a2.zero_coweight(),
        {LaurentSeries::constant(Rat(2)), LaurentSeries::constant(Rat(3))});
    FiberReport rep3 = full_report(a2, g3, a2.coweight_from_lattice({Rat(1), Rat(1)}));
    CHECK(*rep3.dim_total == 2);  // <rho, theta^vee> with zero profile
    CHECK(*rep3.orbit_count == 2);
    CHECK(*rep3.orbit_tag == ProvenanceTag::THEOREM);
    CHECK(*rep3.regular_orbit_bound == 2);

    // ramified report: COMPANION dimension tag
    CoweightQ nu = gl2.coweight_from_lattice({rat_from_string("1/2"), rat_from_string("1/2")});
    TorusElement tw = TorusElement::abstract_element(gl2, 2, gl2.simple_reflection(0), nu, {});
    FiberReport rept = full_report(gl2, tw, gl2.coweight_from_lattice({Rat(1), Rat(0)}));
    CHECK(*rept.dim_total_tag == ProvenanceTag::COMPANION);
    CHECK(*rept.dim_regular == 0);
    CHECK(*rept.dim_total == 0);
    CHECK(*rept.c == 1);
    CHECK(*rept.orbit_tag == ProvenanceTag::CONJECTURAL);
}

TEST_CASE("lower bound scans") {
    RootDatum a1 = RootDatum::from_spec("A1");
    LowerBoundReport rep = verify_lower_bound(a1, 3, true, true);
    CHECK(rep.bound == 1);
    CHECK(rep.failures.empty());
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.rows.size() == rep.pairs_checked);

    RootDatum a2 = RootDatum::from_spec("A2");
    LowerBoundReport rep2 = verify_lower_bound(a2, 3, false, true);
    CHECK(rep2.bound == 2);
    CHECK(rep2.failures.empty());
    CHECK(rep2.min_mult == 2);

    CHECK_THROWS_AS(verify_lower_bound(a2, 9, false, false), SpringerError);
    CHECK_THROWS_AS(verify_lower_bound(RootDatum::from_spec("A4"), 2, false, false),
                    SpringerError);
}
