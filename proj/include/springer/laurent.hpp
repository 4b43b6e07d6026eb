/*
 * laurent.hpp
 * Truncated formal Laurent series over Q. A series knows its coefficients
 * for all exponents < trunc; trunc == kTruncInf means the series is an
 * exact Laurent polynomial. Valuations read off a truncated series are
 * only trusted when a nonzero coefficient is visible; otherwise the
 * valuation is INCONCLUSIVE and callers must propagate that.
 */
#pragma once

#include <limits>
#include <optional>
#include <string>

#include "springer/rational.hpp"

namespace springer {

inline constexpr long kTruncInf = std::numeric_limits<long>::max() / 4;
inline constexpr long kDefaultTruncation = 16;

// Process-wide relative precision used when inverting exact non-monomial
// series (whose inverses are infinite). 16 unless overridden (the CLI maps
// SPRINGER_TRUNCATION onto this).
long default_truncation();
void set_default_truncation(long n);

class LaurentSeries {
  public:
    // Zero series, known up to trunc.
    explicit LaurentSeries(long trunc = kTruncInf) : trunc_(trunc) {}

    // coeffs[k] is the coefficient of w^(lead+k). Canonicalizes.
    LaurentSeries(long lead, RatVec coeffs, long trunc = kTruncInf);

    static LaurentSeries zero(long trunc = kTruncInf) { return LaurentSeries(trunc); }
    static LaurentSeries constant(const Rat& c) { return LaurentSeries(0, {c}); }
    static LaurentSeries one() { return constant(Rat(1)); }
    static LaurentSeries monomial(long exp, const Rat& c = Rat(1)) {
        return LaurentSeries(exp, {c});
    }

    long trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ == kTruncInf; }
    long lead_exponent() const { return lead_; }
    const RatVec& coeffs() const { return coeffs_; }

    // True when the series is the exact zero polynomial.
    bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }

    // Smallest exponent with a visible nonzero coefficient; nullopt when
    // all known coefficients vanish (the true valuation may exceed trunc).
    std::optional<long> valuation() const;

    // Best certified lower bound for the valuation (== valuation when
    // that is conclusive, otherwise trunc).
    long valuation_lower_bound() const { return coeffs_.empty() ? trunc_ : lead_; }

    Rat coeff(long exp) const;  // throws Internal past the truncation order

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled(const Rat& c) const;

    // Multiplicative inverse. rel_terms bounds the number of coefficients
    // produced when inverting an exact non-monomial (whose inverse is an
    // infinite series); the no-argument form uses default_truncation().
    // Throws NotInvertible when no nonzero coefficient is visible.
    LaurentSeries inverse(long rel_terms) const;
    LaurentSeries inverse() const;

    // a^n for n in Z (negative exponents go through inverse()).
    LaurentSeries power(long n) const;

    // Equality of every coefficient both sides know (exponents below the
    // smaller truncation order).
    bool agrees_with(const LaurentSeries& o) const;

    bool operator==(const LaurentSeries& o) const {
        return lead_ == o.lead_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
    }

    std::string to_string() const;

  private:
    void canonicalize();

    long lead_ = 0;
    RatVec coeffs_;
    long trunc_ = kTruncInf;
};

}  // namespace springer
