#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Decimal and exponent notation is rejected so
/// that every accepted string denotes exactly one rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1,1/10,2".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(std::span<const Rational> values);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Scales v by a positive rational so that it becomes a primitive integer
/// vector (gcd of entries 1). The sign is left unchanged. Zero stays zero.
RationalVector primitive_integer(std::span<const Rational> v);

}  // namespace crn
