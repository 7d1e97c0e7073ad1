#pragma once

#include <gmpxx.h>

#include <string>

namespace coopgame {

// All game values, payoffs and LP data are exact rationals backed by GMP.
// Values are kept canonical (normalized sign, gcd(num, den) == 1); every
// constructor below canonicalizes.
using Rational = mpq_class;

/// Build a canonical rational num/den. Throws std::invalid_argument on den == 0.
Rational rat(long num, long den = 1);

/// Parse "n", "-n" or "n/d" (arbitrary precision). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Render canonically: integers as "n", otherwise "n/d".
std::string rational_str(const Rational& value);

/// Greatest common divisor of two nonnegative rationals (0 if both are 0).
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace coopgame
