#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace trilie {

/// Exact rational scalar, always in lowest terms with positive denominator
/// (canonical form is maintained by the underlying mpq representation).
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary-precision integer matching the rational backend.
using Integer = boost::multiprecision::mpz_int;

/// Renders a rational as "p" or "p/q" with no whitespace.
/// Round-trips through parse_rational().
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" where p, q are decimal integers (optional leading '-'
/// on p only). Returns nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace trilie
