#include <random>
#include <set>

#include "doctest.h"
#include "springer/multiplicity.hpp"

using namespace springer;

TEST_CASE("sl2 weight spaces are one dimensional") {
    RootDatum a1 = RootDatum::from_spec("A1");
    CoweightQ adjoint = a1.coweight_from_lattice({Rat(1)});  // alpha^vee
    CHECK(m_lambda_mu(a1, adjoint, a1.zero_coweight()) == 1);
    CHECK(m_lambda_mu(a1, adjoint, adjoint) == 1);
    CHECK(kostant_m_lambda_mu(a1, adjoint, a1.zero_coweight()) == 1);
}

TEST_CASE("adjoint zero weight space of dual A2") {
    RootDatum a2 = RootDatum::from_spec("A2");
    CoweightQ theta = a2.coweight_from_lattice({Rat(1), Rat(1)});
    CHECK(m_lambda_mu(a2, theta, a2.zero_coweight()) == 2);
    CHECK(kostant_m_lambda_mu(a2, theta, a2.zero_coweight()) == 2);
    CHECK(weyl_dimension_dual(a2, theta) == 8);
    CHECK(weyl_dimension_dual(a2, a2.zero_coweight()) == 1);
}

TEST_CASE("highest weight line") {
    std::mt19937_64 rng(3);
    for (const char* type : {"A2", "B2", "G2"}) {
        RootDatum d = RootDatum::from_spec(type);
        std::uniform_int_distribution<long> coord(0, 3);
        for (int i = 0; i < 5; ++i) {
            RatVec u = {Rat(coord(rng)), Rat(coord(rng))};
            CoweightQ lam = d.dominant_representative(d.coweight_from_lattice(u)).first;
            CHECK(m_lambda_mu(d, lam, lam) == 1);
        }
    }
}

TEST_CASE("kostant partition function in A2") {
    RootDatum a2 = RootDatum::from_spec("A2");
    WeightEngine engine(a2.dual_cartan());
    CHECK(engine.kostant_partition({0, 0}) == 1);
    // alpha_1^vee + alpha_2^vee: as the two simples or the long coroot
    CHECK(engine.kostant_partition({1, 1}) == 2);
    CHECK(engine.kostant_partition({-1, 0}) == 0);
    // 2a1 + a2 = 2*a1 + a2 or a1 + (a1 + a2)
    CHECK(engine.kostant_partition({2, 1}) == 2);
    // 2a1 + 2a2 = 2+2 simples, one of each + theta, or 2 theta
    CHECK(engine.kostant_partition({2, 2}) == 3);
}

TEST_CASE("mu outside the root lattice class") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    CoweightQ lam = gl2.coweight_from_lattice({Rat(1), Rat(0)});
    CoweightQ mu = gl2.coweight_from_lattice({Rat(1), Rat(-1)});
    CHECK(m_lambda_mu(gl2, lam, mu) == 0);
    CHECK(kostant_m_lambda_mu(gl2, lam, mu) == 0);
}

TEST_CASE("W-invariance in mu") {
    std::mt19937_64 rng(17);
    RootDatum b2 = RootDatum::from_spec("B2");
    CoweightQ lam = b2.coweight_from_lattice({Rat(2), Rat(1)});
    DualMultiplicities table(b2, lam);
    std::uniform_int_distribution<size_t> widx(0, b2.weyl_order() - 1);
    std::uniform_int_distribution<long> coord(-2, 2);
    for (int i = 0; i < 20; ++i) {
        CoweightQ mu = b2.coweight_from_lattice({Rat(coord(rng)), Rat(coord(rng))});
        const WeylElement& w = b2.weyl_group()[widx(rng)];
        CHECK(table.at(mu) == table.at(b2.apply(w, mu)));
    }
}

TEST_CASE("positivity matches dominance") {
    // m_{lambda mu} > 0 iff mu <= lambda, over a grid of dominant pairs
    RootDatum a2 = RootDatum::from_spec("A2");
    WeightEngine engine(a2.dual_cartan());
    for (long l1 = 0; l1 <= 3; ++l1)
        for (long l2 = 0; l2 <= 3; ++l2) {
            IVec lam = {l1, l2};
            auto table = engine.freudenthal_table(lam);
            for (long m1 = 0; m1 <= 3; ++m1)
                for (long m2 = 0; m2 <= 3; ++m2) {
                    IVec mu = {m1, m2};
                    bool below = engine.root_coeffs_of_diff(lam, mu).has_value();
                    long mult = table.count(mu) ? table.at(mu) : 0;
                    CHECK((mult > 0) == below);
                }
        }
}

TEST_CASE("G2 fundamental dimensions") {
    RootDatum g2 = RootDatum::from_spec("G2");
    CoweightQ f1 = g2.coweight_from_lattice({Rat(2), Rat(3)});  // fundamental coweight 1
    CoweightQ f2 = g2.coweight_from_lattice({Rat(1), Rat(2)});  // fundamental coweight 2
    CHECK(g2.coroot_coords(f1) == RatVec{Rat(2), Rat(3)});
    CHECK(f1.coords[0] == 1);
    CHECK(f1.coords[1] == 0);
    std::set<mpz_class> dims = {weyl_dimension_dual(g2, f1), weyl_dimension_dual(g2, f2)};
    CHECK(dims == std::set<mpz_class>{mpz_class(7), mpz_class(14)});
    // character-sum cross-check pins each dimension
    WeightEngine engine(g2.dual_cartan());
    for (const CoweightQ& f : {f1, f2}) {
        IVec y = dual_weight_coords(g2, f);
        mpz_class total = 0;
        for (const auto& [mu, mult] : engine.freudenthal_table(y))
            total += mpz_class(mult) * mpz_class(engine.orbit_size(mu));
        CHECK(total == engine.weyl_dimension(y));
    }
}

TEST_CASE("fundamental weight systems of G") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    auto sys = fundamental_weight_system(gl2, 0);
    REQUIRE(sys.size() == 2);  // the standard representation
    std::set<RatVec> weights;
    for (const auto& [chi, mult] : sys) {
        CHECK(mult == 1);
        weights.insert(gl2.weight_lattice_coords(chi));
    }
    CHECK(weights == std::set<RatVec>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});

    RootDatum a2 = RootDatum::from_spec("A2");
    CHECK(fundamental_weight_system(a2, 0).size() == 3);
    CHECK(fundamental_weight_system(a2, 1).size() == 3);

    RootDatum b2 = RootDatum::from_spec("B2");
    // 5-dimensional vector representation and 4-dimensional spin representation
    std::set<size_t> sizes = {fundamental_weight_system(b2, 0).size(),
                              fundamental_weight_system(b2, 1).size()};
    CHECK(sizes == std::set<size_t>{4, 5});
}

TEST_CASE("errors") {
    RootDatum a2 = RootDatum::from_spec("A2");
    CoweightQ half = Rat(1) / Rat(2) * a2.coweight_from_lattice({Rat(1), Rat(1)});
    CHECK_THROWS_AS(m_lambda_mu(a2, half, a2.zero_coweight()), SpringerError);
    RootDatum e6 = RootDatum::from_spec("E6");
    WeightEngine engine(e6.dual_cartan());
    CHECK_THROWS_AS(engine.kostant_multiplicity(IVec(6, 1), IVec(6, 0)), SpringerError);
}
