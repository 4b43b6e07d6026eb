#include "springer/laurent.hpp"

#include <algorithm>

#include "springer/errors.hpp"

namespace springer {

namespace {
long g_default_truncation = kDefaultTruncation;
}

long default_truncation() { return g_default_truncation; }

void set_default_truncation(long n) {
    if (n < 1) fail(ErrorCode::MalformedSpec, "truncation order must be positive");
    g_default_truncation = n;
}

LaurentSeries::LaurentSeries(long lead, RatVec coeffs, long trunc)
    : lead_(lead), coeffs_(std::move(coeffs)), trunc_(trunc) {
    canonicalize();
}

void LaurentSeries::canonicalize() {
    // clip anything at or past the truncation order
    if (trunc_ != kTruncInf && lead_ + static_cast<long>(coeffs_.size()) > trunc_) {
        long keep = trunc_ - lead_;
        coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
        lead_ += static_cast<long>(first);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) lead_ = 0;
}

std::optional<long> LaurentSeries::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return lead_;
}

Rat LaurentSeries::coeff(long exp) const {
    if (exp >= trunc_)
        fail(ErrorCode::Internal, "coefficient past truncation order requested");
    if (exp < lead_ || exp >= lead_ + static_cast<long>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(exp - lead_)];
}

LaurentSeries LaurentSeries::operator-() const {
    RatVec c = coeffs_;
    for (auto& x : c) x = -x;
    return LaurentSeries(lead_, std::move(c), trunc_);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    long trunc = std::min(trunc_, o.trunc_);
    if (coeffs_.empty() && o.coeffs_.empty()) return LaurentSeries(trunc);
    long lo = std::min(coeffs_.empty() ? o.lead_ : lead_,
                       o.coeffs_.empty() ? lead_ : o.lead_);
    long hi = lo;  // one past the last stored exponent
    hi = std::max(hi, lead_ + static_cast<long>(coeffs_.size()));
    hi = std::max(hi, o.lead_ + static_cast<long>(o.coeffs_.size()));
    hi = std::min(hi, trunc);
    if (hi <= lo) return LaurentSeries(trunc);
    RatVec c(static_cast<size_t>(hi - lo), Rat(0));
    auto acc = [&](const LaurentSeries& s, int sign) {
        for (size_t k = 0; k < s.coeffs_.size(); ++k) {
            long e = s.lead_ + static_cast<long>(k);
            if (e < lo || e >= hi) continue;
            if (sign > 0)
                c[static_cast<size_t>(e - lo)] += s.coeffs_[k];
            else
                c[static_cast<size_t>(e - lo)] -= s.coeffs_[k];
        }
    };
    acc(*this, +1);
    acc(o, +1);
    return LaurentSeries(lo, std::move(c), trunc);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // trunc(a*b) = min(N_a + lb(b), N_b + lb(a)); lb = certified valuation
    // lower bound. Exact * exact stays exact.
    long trunc = kTruncInf;
    if (trunc_ != kTruncInf || o.trunc_ != kTruncInf) {
        long t1 = (trunc_ == kTruncInf) ? kTruncInf : trunc_ + o.valuation_lower_bound();
        long t2 = (o.trunc_ == kTruncInf) ? kTruncInf : o.trunc_ + valuation_lower_bound();
        trunc = std::min(t1, t2);
    }
    if (coeffs_.empty() || o.coeffs_.empty()) return LaurentSeries(trunc);
    long lo = lead_ + o.lead_;
    long hi = lo + static_cast<long>(coeffs_.size() + o.coeffs_.size()) - 1;
    if (trunc != kTruncInf) hi = std::min(hi, trunc);
    if (hi <= lo) return LaurentSeries(trunc);
    RatVec c(static_cast<size_t>(hi - lo), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            long e = lo + static_cast<long>(i + j);
            if (e >= hi) break;
            c[static_cast<size_t>(e - lo)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return LaurentSeries(lo, std::move(c), trunc);
}

LaurentSeries LaurentSeries::scaled(const Rat& s) const {
    RatVec c = coeffs_;
    for (auto& x : c) x *= s;
    return LaurentSeries(lead_, std::move(c), trunc_);
}

LaurentSeries LaurentSeries::inverse(long rel_terms) const {
    if (coeffs_.empty())
        fail(ErrorCode::NotInvertible,
             is_exact() ? "cannot invert the zero series"
                        : "cannot invert: valuation inconclusive at truncation order " +
                              std::to_string(trunc_));
    long v = lead_;
    if (coeffs_.size() == 1 && is_exact())
        return LaurentSeries(-v, {Rat(1) / coeffs_[0]});
    long rel = is_exact() ? rel_terms : trunc_ - v;
    // b = (a / w^v)^{-1} term by term, then shift back.
    RatVec b(static_cast<size_t>(rel), Rat(0));
    b[0] = Rat(1) / coeffs_[0];
    for (long k = 1; k < rel; ++k) {
        Rat s(0);
        for (long j = 1; j <= k && j < static_cast<long>(coeffs_.size()); ++j)
            s += coeffs_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = -s / coeffs_[0];
    }
    return LaurentSeries(-v, std::move(b), -v + rel);
}

LaurentSeries LaurentSeries::inverse() const { return inverse(default_truncation()); }

LaurentSeries LaurentSeries::power(long n) const {
    if (n == 0) return one();
    LaurentSeries base = n > 0 ? *this : inverse();
    long e = n > 0 ? n : -n;
    LaurentSeries acc = base;
    for (long i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    long trunc = std::min(trunc_, o.trunc_);
    LaurentSeries d = *this - o;
    for (size_t k = 0; k < d.coeffs_.size(); ++k) {
        long e = d.lead_ + static_cast<long>(k);
        if (e < trunc && d.coeffs_[k] != 0) return false;
    }
    return true;
}

std::string LaurentSeries::to_string() const {
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        long e = lead_ + static_cast<long>(k);
        Rat a = c > 0 ? c : Rat(-c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) out += rat_to_string(a);
        if (e != 0) {
            if (!unit_coeff) out += "*";
            out += "w";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(w^" + std::to_string(trunc_) + ")";
    return out;
}

}  // namespace springer
