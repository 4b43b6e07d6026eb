#include <random>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/laurent.hpp"

using namespace springer;

namespace {

LaurentSeries random_series(std::mt19937_64& rng, bool force_nonzero_lead = true) {
    std::uniform_int_distribution<long> lead(-3, 3);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> exact(0, 1);
    long l = lead(rng);
    RatVec c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) c.emplace_back(coef(rng));
    if (force_nonzero_lead && c[0] == 0) c[0] = 1;
    long trunc = exact(rng) ? kTruncInf : l + n + 2;
    return LaurentSeries(l, std::move(c), trunc);
}

}  // namespace

TEST_CASE("valuation basics") {
    LaurentSeries s(2, {Rat(1), Rat(1)}, 10);  // w^2 + w^3
    CHECK(s.valuation() == 2);

    LaurentSeries zero_truncated(10);
    CHECK(!zero_truncated.valuation().has_value());
    CHECK(!zero_truncated.is_exact_zero());

    // (1 + w) - 1 = w
    LaurentSeries one_plus_w(0, {Rat(1), Rat(1)});
    CHECK((one_plus_w - LaurentSeries::one()).valuation() == 1);

    CHECK(LaurentSeries::zero().is_exact_zero());
}

TEST_CASE("canonical form") {
    LaurentSeries s(0, {Rat(0), Rat(2), Rat(0)}, 10);
    CHECK(s.lead_exponent() == 1);
    CHECK(s.coeffs() == RatVec{Rat(2)});
    // coefficients at or past the truncation order are dropped
    LaurentSeries t(8, {Rat(1), Rat(1), Rat(1)}, 10);
    CHECK(t.coeffs().size() == 2);
}

TEST_CASE("multiplication") {
    LaurentSeries w = LaurentSeries::monomial(1);
    LaurentSeries winv = LaurentSeries::monomial(-1);
    CHECK(w * winv == LaurentSeries::one());

    LaurentSeries a(0, {Rat(1), Rat(1)});   // 1 + w
    LaurentSeries b(0, {Rat(1), Rat(-1)});  // 1 - w
    LaurentSeries ab = a * b;
    CHECK(ab == LaurentSeries(0, {Rat(1), Rat(0), Rat(-1)}));
}

TEST_CASE("valuations add under multiplication") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        LaurentSeries a = random_series(rng);
        LaurentSeries b = random_series(rng);
        auto va = a.valuation(), vb = b.valuation();
        REQUIRE(va.has_value());
        REQUIRE(vb.has_value());
        CHECK((a * b).valuation() == *va + *vb);
    }
}

TEST_CASE("truncation order of products") {
    // trunc(a*b) = min(N_a + v_b, N_b + v_a)
    LaurentSeries a(1, {Rat(1)}, 5);   // w + O(w^5)
    LaurentSeries b(2, {Rat(3)}, 10);  // 3w^2 + O(w^10)
    CHECK((a * b).trunc() == std::min(5 + 2, 10 + 1));
}

TEST_CASE("inverse") {
    CHECK(LaurentSeries::monomial(1).inverse() == LaurentSeries::monomial(-1));

    // geometric series
    LaurentSeries one_minus_w(0, {Rat(1), Rat(-1)});
    LaurentSeries inv = one_minus_w.inverse();
    for (long k = 0; k < 16; ++k) CHECK(inv.coeff(k) == 1);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        LaurentSeries u = random_series(rng);
        CHECK((u * u.inverse()).agrees_with(LaurentSeries::one()));
        CHECK(u.inverse().inverse().agrees_with(u));
    }

    CHECK_THROWS_AS(LaurentSeries::zero().inverse(), SpringerError);
    CHECK_THROWS_AS(LaurentSeries::zero(10).inverse(), SpringerError);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b).agrees_with(b * a));
        CHECK(((a * b) * c).agrees_with(a * (b * c)));
        CHECK((a * (b + c)).agrees_with(a * b + a * c));
    }
}

TEST_CASE("integer powers") {
    LaurentSeries u(0, {Rat(1), Rat(1)});
    CHECK(u.power(0) == LaurentSeries::one());
    CHECK(u.power(2) == LaurentSeries(0, {Rat(1), Rat(2), Rat(1)}));
    CHECK((u.power(-2) * u.power(2)).agrees_with(LaurentSeries::one()));
}
