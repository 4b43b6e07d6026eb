/*
 * rational.hpp
 * Exact rational scalars. Rat is GMP's mpq_class; everything downstream
 * (coweights, Laurent coefficients, dimension formulas) is built on it,
 * so there is no floating point anywhere in the library.
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// MalformedSpec on anything else.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Checked narrowing; the caller promises r is integral.
long rat_to_long(const Rat& r);

mpz_class rat_floor(const Rat& r);
mpz_class rat_ceil(const Rat& r);
// Range-checked narrowing variants.
long rat_floor_long(const Rat& r);
long rat_ceil_long(const Rat& r);

std::string ratvec_to_string(const RatVec& v);

}  // namespace springer
