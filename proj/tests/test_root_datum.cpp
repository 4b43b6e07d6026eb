#include <random>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/root_datum.hpp"

using namespace springer;

TEST_CASE("classification counts") {
    struct Case {
        const char* type;
        size_t roots;
        size_t weyl;
    };
    const Case cases[] = {
        {"A1", 1, 2},   {"A2", 3, 6},    {"A3", 6, 24},    {"A4", 10, 120},
        {"B2", 4, 8},   {"B3", 9, 48},   {"G2", 6, 12},    {"F4", 24, 1152},
        {"C3", 9, 48},  {"D4", 12, 192},
    };
    for (const auto& c : cases) {
        RootDatum d = RootDatum::from_spec(c.type);
        CHECK_MESSAGE(d.positive_roots().size() == c.roots, c.type);
        CHECK_MESSAGE(d.weyl_order() == c.weyl, c.type);
        CHECK(d.longest_element().length() == c.roots);
    }
}

TEST_CASE("spec parsing") {
    CHECK(RootDatum::from_spec("A1").semisimple_rank() == 1);
    CHECK(RootDatum::from_spec("SL3").positive_roots().size() == 3);
    CHECK(RootDatum::from_spec("GL2").central_rank() == 1);
    CHECK(RootDatum::from_spec(" A1 * A2 ").positive_roots().size() == 4);
    CHECK_THROWS_AS(RootDatum::from_spec("Q5"), SpringerError);
    CHECK_THROWS_AS(RootDatum::from_spec(""), SpringerError);
    CHECK_THROWS_AS(RootDatum::from_spec("A0"), SpringerError);
    CHECK_THROWS_AS(RootDatum::from_spec("G3"), SpringerError);
}

TEST_CASE("pairings") {
    RootDatum a2 = RootDatum::from_spec("A2");
    CHECK(a2.pair(a2.simple_root(0), a2.simple_coroot(0)) == 2);
    for (const char* type : {"A2", "B2", "G2", "B3"}) {
        RootDatum d = RootDatum::from_spec(type);
        for (size_t i = 0; i < d.semisimple_rank(); ++i) {
            CHECK(d.pair(d.rho(), d.simple_coroot(i)) == 1);
            for (size_t j = 0; j < d.semisimple_rank(); ++j) {
                CHECK(d.pair(d.fundamental_weight(i), d.simple_coroot(j)) ==
                      ((i == j) ? 1 : 0));
                // <alpha_i, alpha_j^vee> = C_{ji}
                CHECK(d.pair(d.simple_root(i), d.simple_coroot(j)) == d.cartan()[j][i]);
            }
        }
    }
    // theta^vee = alpha_1^vee + alpha_2^vee in A2; <rho, theta^vee> = 2
    CoweightQ theta = a2.coweight_from_lattice({Rat(1), Rat(1)});
    CHECK(a2.pair(a2.rho(), theta) == 2);
}

TEST_CASE("positive roots closed under partial reflection") {
    for (const char* type : {"A2", "B2", "G2", "B3"}) {
        RootDatum d = RootDatum::from_spec(type);
        for (size_t a = 0; a < d.positive_roots().size(); ++a) {
            const auto& pr = d.positive_roots()[a];
            for (size_t i = 0; i < d.semisimple_rank(); ++i) {
                WeylElement s = d.simple_reflection(i);
                CoweightQ img = d.apply(s, pr.coroot);
                RatVec t = d.coroot_coords(img);
                bool is_positive = true;
                for (const auto& q : t)
                    if (q < 0) is_positive = false;
                bool is_simple_i =
                    pr.height == 1 && pr.root_coeffs[i] == 1;
                CHECK(is_positive == !is_simple_i);
            }
        }
    }
}

TEST_CASE("dominant representative") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    CoweightQ c = gl2.coweight_from_lattice({Rat(0), Rat(1)});
    auto [dom, w] = gl2.dominant_representative(c);
    CHECK(gl2.lattice_coords(dom) == RatVec{Rat(1), Rat(0)});
    CHECK(w.length() == 1);
    CHECK(gl2.apply(w, c) == dom);

    // already dominant: identity
    auto [dom2, w2] = gl2.dominant_representative(dom);
    CHECK(dom2 == dom);
    CHECK(w2.is_identity());

    // A2: -theta^vee goes to theta^vee via w0
    RootDatum a2 = RootDatum::from_spec("A2");
    CoweightQ theta = a2.coweight_from_lattice({Rat(1), Rat(1)});
    auto [dom3, w3] = a2.dominant_representative(Rat(-1) * theta);
    CHECK(dom3 == theta);
    CHECK(w3.length() == a2.longest_element().length());
}

TEST_CASE("dominant representative is W-invariant and idempotent") {
    std::mt19937_64 rng(5);
    for (const char* type : {"A2", "B2", "GL3"}) {
        RootDatum d = RootDatum::from_spec(type);
        std::uniform_int_distribution<long> coord(-4, 4);
        std::uniform_int_distribution<size_t> widx(0, d.weyl_order() - 1);
        for (int i = 0; i < 25; ++i) {
            RatVec u(d.rank());
            for (auto& x : u) x = coord(rng);
            CoweightQ c = d.coweight_from_lattice(u);
            CoweightQ dom = d.dominant_representative(c).first;
            const WeylElement& w = d.weyl_group()[widx(rng)];
            CHECK(d.dominant_representative(d.apply(w, c)).first == dom);
            CHECK(d.dominant_representative(dom).first == dom);
        }
    }
}

TEST_CASE("minus w0") {
    RootDatum a2 = RootDatum::from_spec("A2");
    // the diagram flip swaps the two fundamental coweights
    CHECK(a2.apply_minus_w0(a2.fundamental_coweight(0)) == a2.fundamental_coweight(1));

    RootDatum b2 = RootDatum::from_spec("B2");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coord(0, 4);
    for (int i = 0; i < 10; ++i) {
        RatVec u(2);
        for (auto& x : u) x = coord(rng);
        CoweightQ c = b2.coweight_from_lattice(u);
        CoweightQ dom = b2.dominant_representative(c).first;
        CHECK(b2.apply_minus_w0(dom) == dom);  // w0 = -1 in B2
    }

    CHECK(a2.apply_minus_w0(a2.zero_coweight()) == a2.zero_coweight());
    // involution on dominant coweights
    for (int i = 0; i < 10; ++i) {
        RatVec u = {Rat(std::uniform_int_distribution<long>(0, 4)(rng)),
                    Rat(std::uniform_int_distribution<long>(0, 4)(rng))};
        CoweightQ dom = a2.dominant_representative(a2.coweight_from_lattice(u)).first;
        CHECK(a2.apply_minus_w0(a2.apply_minus_w0(dom)) == dom);
        CHECK(a2.is_dominant(a2.apply_minus_w0(dom)));
    }
}

TEST_CASE("weyl element words") {
    for (const char* type : {"A2", "B2", "G2"}) {
        RootDatum d = RootDatum::from_spec(type);
        for (const WeylElement& w : d.weyl_group()) {
            CHECK(d.element_from_word(w.word).mat == w.mat);
            CHECK(d.inversion_count(w) == w.length());
        }
    }
}

TEST_CASE("GL datum lattice") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    CHECK(gl2.semisimple_rank() == 1);
    CHECK(gl2.central_rank() == 1);
    CHECK(gl2.is_integral(gl2.coweight_from_lattice({Rat(1), Rat(0)})));
    CHECK(!gl2.is_integral(gl2.coweight_from_lattice({rat_from_string("1/2"),
                                                      rat_from_string("1/2")})));
    // (1,0) and (0,1) differ by the coroot; (1,0) and (1,-1) do not
    CoweightQ a = gl2.coweight_from_lattice({Rat(1), Rat(0)});
    CoweightQ b = gl2.coweight_from_lattice({Rat(0), Rat(1)});
    CoweightQ c = gl2.coweight_from_lattice({Rat(1), Rat(-1)});
    CHECK(gl2.det_class_equal(a, b));
    CHECK(!gl2.det_class_equal(a, c));
    // lattice coordinate round trip
    CHECK(gl2.lattice_coords(a) == RatVec{Rat(1), Rat(0)});

    RootDatum gl3 = RootDatum::from_spec("GL3");
    CHECK(gl3.is_integral_weight(gl3.fundamental_weight(0)));
    CHECK(gl3.is_integral_weight(gl3.fundamental_weight(1)));
    // dominance in standard coordinates is the descending-order condition
    CHECK(gl3.is_dominant(gl3.coweight_from_lattice({Rat(2), Rat(1), Rat(-1)})));
    CHECK(!gl3.is_dominant(gl3.coweight_from_lattice({Rat(1), Rat(2), Rat(0)})));
}

TEST_CASE("simply connected check") {
    // adjoint A1: lattice generated by the fundamental coweight (x = 1)
    RatMat basis = {{Rat(1)}};
    CHECK_THROWS_AS(RootDatum::from_cartan({{2}}, 0, basis, "PGL2-like"), SpringerError);
    try {
        RootDatum::from_cartan({{2}}, 0, basis, "PGL2-like");
    } catch (const SpringerError& e) {
        CHECK(e.code() == ErrorCode::NotSimplyConnected);
    }
}

TEST_CASE("non-cartan data rejected") {
    CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {0, 2}}, 0), SpringerError);
    CHECK_THROWS_AS(RootDatum::from_cartan({{2, -2}, {-2, 2}}, 0), SpringerError);  // affine
    CHECK_THROWS_AS(RootDatum::from_cartan({{1}}, 0), SpringerError);
}

TEST_CASE("products") {
    RootDatum d = RootDatum::from_spec("A1*A1");
    CHECK(d.positive_roots().size() == 2);
    CHECK(d.weyl_order() == 4);
    CHECK(d.simple_factor_ranks() == std::vector<size_t>{1, 1});

    RootDatum e = RootDatum::from_spec("A1*B2");
    CHECK(e.positive_roots().size() == 5);
    CHECK(e.weyl_order() == 16);

    RootDatum f = RootDatum::from_spec("GL2*A1");
    CHECK(f.rank() == 3);
    CHECK(f.central_rank() == 1);
    CHECK(f.is_integral(f.coweight_from_lattice({Rat(1), Rat(0), Rat(1)})));
}

TEST_CASE("weyl cap") {
    RootDatum e6 = RootDatum::from_spec("E6");  // |W| = 51840 > cap
    CHECK(e6.positive_roots().size() == 36);
    CHECK_THROWS_AS(e6.weyl_order(), SpringerError);
}
