#pragma once

#include <string>

#include <gmpxx.h>

namespace qcalc {

/// Exact rational scalar. GMP's canonicalized mpq carries the arithmetic;
/// this header adds the parsing/printing conventions used across the tool.
using Rational = mpq_class;

/// Parse "p/q", "n", or a plain decimal ("0.375" -> 3/8) without any
/// round-trip through floating point. Throws DomainError on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

/// r^n for any integer n (n < 0 inverts; throws DomainError on 0^-n).
Rational pow_int(const Rational& base, long n);

} // namespace qcalc
