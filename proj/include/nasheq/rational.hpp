#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nasheq {

// Exact arithmetic backing for the whole library. GMP keeps rationals
// canonical (coprime numerator/denominator, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" (q > 0 after canonicalisation). Rejects empty
// strings, floats, and zero denominators with ParseError.
Rat rat_from_string(const std::string& text);

// Renders "p" for integers and "p/q" otherwise. Round-trips with
// rat_from_string.
std::string rat_to_string(const Rat& value);

inline int sign_of(const Rat& value) { return sgn(value); }

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

// Floor of the exact square root of a non-negative integer.
Int isqrt_floor(const Int& value);

// The exact integer square root when `value` is a perfect square.
std::optional<Int> exact_sqrt(const Int& value);

// True when a non-negative rational is the square of a rational.
bool is_rational_square(const Rat& value);

// 10^exponent as an exact integer (exponent >= 0).
Int pow10(unsigned exponent);

// Rounds to `digits` fractional digits, half away from zero, and renders the
// result with exactly `digits` digits after the decimal point.
std::string decimal_string(const Rat& value, int digits);

}  // namespace nasheq
