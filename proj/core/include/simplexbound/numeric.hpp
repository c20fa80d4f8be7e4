#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace simplexbound {

using Int = mpz_class;
using Rat = mpq_class;

// bit(n) = floor(log2 |n|) + 1 for n != 0, and bit(0) = 1 so degree/bitsize
// products in bound formulas never collapse to zero.
unsigned long bitsize(const Int& n);

// Least e >= 0 with 2^e >= n. Requires n >= 1.
unsigned long ceil_log2(const Int& n);

// Least e (possibly negative) with 2^e >= q. Requires q > 0.
long ceil_log2(const Rat& q);

Int pow_int(const Int& base, unsigned long exp);
Int pow2(unsigned long exp);

// floor(sqrt(n)) and ceil(sqrt(n)). Require n >= 0.
Int isqrt_floor(const Int& n);
Int isqrt_ceil(const Int& n);

// num/den in lowest terms with positive denominator. Requires den != 0.
Rat make_rat(const Int& num, const Int& den);

// Canonical "num/den" (or plain "num" when den == 1).
std::string rat_string(const Rat& q);

// Accepts "a", "-a", "a/b", "-a/b" and decimal "a.b"; exact conversion.
// Throws std::invalid_argument on malformed text.
Rat parse_rat(const std::string& text);

// Dyadic log2 bounds with 64 fractional bits: the returned rational has
// denominator 2^64 and brackets log2(n) from above/below. Requires n >= 1.
// Display and comparison-estimate use only; certified bounds never call these.
Rat log2_upper(const Int& n);
Rat log2_lower(const Int& n);

// Dyadic upper bound on base^exp, 64 fractional bits. Requires base >= 1,
// exp >= 0. Exact when exp is an integer.
Rat pow_upper(const Int& base, const Rat& exp);

// Fixed-point decimal rendering of q with `digits` places, rounding toward
// +infinity. Deterministic; used for log2 display fields.
std::string decimal_string_round_up(const Rat& q, unsigned digits);

}  // namespace simplexbound
