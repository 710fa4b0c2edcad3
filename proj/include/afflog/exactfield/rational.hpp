#pragma once

#include <gmpxx.h>

#include <string>

namespace afflog {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (no floats). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline mpq_class one_like(const mpq_class&) { return mpq_class(1); }

/// Best rational approximation of x with denominator at most `max_den`
/// (continued fraction convergents and semiconvergents).
Rational best_rational(const Rational& x, const mpz_class& max_den);

mpz_class lcm_of_denominators(const Rational* begin, const Rational* end);

}  // namespace afflog
