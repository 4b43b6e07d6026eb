#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/json_io.hpp"
#include "springer/verification.hpp"

using namespace springer;

TEST_CASE("rationals") {
    CHECK(rat_from_string("3/4") == Rat(3) / Rat(4));
    CHECK(rat_from_string("-2") == Rat(-2));
    CHECK(rat_from_string("6/4") == Rat(3) / Rat(2));
    CHECK(rat_to_string(Rat(3) / Rat(4)) == "3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), SpringerError);
    CHECK_THROWS_AS(rat_from_string("x"), SpringerError);
    CHECK_THROWS_AS(rat_from_string("1.5"), SpringerError);
}

TEST_CASE("series round trip") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> lead(-3, 3);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < 40; ++i) {
        RatVec c;
        for (int k = 0; k < 5; ++k) c.emplace_back(coef(rng));
        long l = lead(rng);
        LaurentSeries s(l, c, (i % 2) ? kTruncInf : l + 7);
        CHECK(series_from_json(series_to_json(s)) == s);
    }
    // fields may be omitted
    LaurentSeries parsed = series_from_json(Json::parse(R"({"coeffs": ["1", "1/2"]})"));
    CHECK(parsed.coeff(1) == Rat(1) / Rat(2));
    CHECK(parsed.is_exact());
}

TEST_CASE("gamma round trip") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    std::mt19937_64 rng(67);
    TorusElement g = random_concrete_element(gl2, rng, 2);
    TorusElement back = gamma_from_json(gl2, gamma_to_json(gl2, g));
    CHECK(gamma_to_json(gl2, back) == gamma_to_json(gl2, g));

    CoweightQ nu = gl2.coweight_from_lattice({rat_from_string("1/2"), rat_from_string("1/2")});
    TorusElement abs = TorusElement::abstract_element(gl2, 2, gl2.simple_reflection(0), nu,
                                                      {{0, rat_from_string("1/2")}});
    TorusElement abs_back = gamma_from_json(gl2, gamma_to_json(gl2, abs));
    CHECK(gamma_to_json(gl2, abs_back) == gamma_to_json(gl2, abs));
}

TEST_CASE("gamma parsing matches the documented shapes") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    Json j = Json::parse(R"({
        "model": "concrete",
        "mu": [1, 0],
        "units": [{"lead": 0, "coeffs": [1]}, {"lead": 0, "coeffs": [1]}]
    })");
    TorusElement g = gamma_from_json(gl2, j);
    CHECK(g.is_concrete());
    CHECK(gl2.lattice_coords(g.concrete_data().mu) == RatVec{Rat(1), Rat(0)});

    Json ja = Json::parse(R"({
        "model": "abstract", "e": 2, "w": "s1",
        "nu": ["1/2", "1/2"], "profile": {"0": "1/2"}
    })");
    TorusElement a = gamma_from_json(gl2, ja);
    CHECK(!a.is_concrete());
    CHECK(a.abstract_data().e == 2);
    CHECK_THROWS_AS(gamma_from_json(gl2, Json::parse(R"({"model": "nope"})")), SpringerError);
}

TEST_CASE("datum from json") {
    Json j = Json::parse(R"({"cartan": [[2, -1], [-2, 2]], "central_rank": 1})");
    RootDatum d = datum_from_json(j);
    CHECK(d.semisimple_rank() == 2);
    CHECK(d.central_rank() == 1);
    CHECK(d.positive_roots().size() == 4);
    CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"central_rank": 1})")), SpringerError);
}

TEST_CASE("report round trip") {
    RootDatum gl2 = RootDatum::from_spec("GL2");
    TorusElement g = TorusElement::concrete(gl2, gl2.coweight_from_lattice({Rat(1), Rat(0)}),
                                            {LaurentSeries::one(), LaurentSeries::one()});
    for (const RatVec& lam_coords :
         {RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}, RatVec{Rat(2), Rat(-1)}}) {
        FiberReport rep = full_report(gl2, g, gl2.coweight_from_lattice(lam_coords));
        Json j = report_to_json(gl2, rep);
        FiberReport back = report_from_json(gl2, j);
        CHECK(report_to_json(gl2, back) == j);
    }
}

TEST_CASE("cli coweight parsing") {
    RootDatum gl3 = RootDatum::from_spec("GL3");
    CoweightQ c = coweight_from_cli(gl3, "1/2,-1,3");
    CHECK(gl3.lattice_coords(c) == RatVec{Rat(1) / Rat(2), Rat(-1), Rat(3)});
    CHECK_THROWS_AS(coweight_from_cli(gl3, "1,2"), SpringerError);
    CHECK_THROWS_AS(coweight_from_cli(gl3, "1,x,2"), SpringerError);
}

TEST_CASE("weyl words") {
    RootDatum b2 = RootDatum::from_spec("B2");
    CHECK(weyl_word_from_string(b2, "id").is_identity());
    CHECK(weyl_word_from_string(b2, "s1 s2").length() == 2);
    CHECK(weyl_word_from_string(b2, "s1*s2*s1*s2").length() == 4);
    CHECK_THROWS_AS(weyl_word_from_string(b2, "s3"), SpringerError);
    CHECK_THROWS_AS(weyl_word_from_string(b2, "t1"), SpringerError);
}
