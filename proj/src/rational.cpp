#include "springer/rational.hpp"

#include <cctype>

namespace springer {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(ErrorCode::MalformedSpec, "empty rational literal");
    size_t pos = 0;
    auto scan_int = [&](const char* what) {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0)
            fail(ErrorCode::MalformedSpec,
                 std::string("bad rational literal '") + s + "': missing " + what);
        return s.substr(start, pos - start);
    };
    std::string num = scan_int("numerator");
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = scan_int("denominator");
    }
    if (pos != s.size())
        fail(ErrorCode::MalformedSpec, "bad rational literal '" + s + "'");
    mpz_class d(den);
    if (d == 0) fail(ErrorCode::MalformedSpec, "zero denominator in '" + s + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long rat_to_long(const Rat& r) {
    if (!is_integer(r))
        fail(ErrorCode::Internal, "rat_to_long on non-integer " + rat_to_string(r));
    if (!r.get_num().fits_slong_p())
        fail(ErrorCode::Internal, "integer out of long range: " + rat_to_string(r));
    return r.get_num().get_si();
}

mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

mpz_class rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

namespace {
long narrow(const mpz_class& z, const char* who) {
    if (!z.fits_slong_p())
        fail(ErrorCode::Internal, std::string(who) + " out of long range: " + z.get_str());
    return z.get_si();
}
}  // namespace

long rat_floor_long(const Rat& r) { return narrow(rat_floor(r), "floor"); }
long rat_ceil_long(const Rat& r) { return narrow(rat_ceil(r), "ceil"); }

std::string ratvec_to_string(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace springer
