#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace entlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always held in canonical form
/// (reduced fraction, positive denominator); equality is true equality.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization. Throws ParseError on zero denominator.
Rational make_rational(BigInt num, BigInt den);

/// Parses "3/10", "0.3", "7", ".5" or "2.5e-1" into an exact rational.
/// Decimal inputs convert exactly (0.3 becomes 3/10). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical fraction rendering: "3/10", integers without the "/1".
std::string to_fraction_string(const Rational& value);

/// Approximate decimal rendering for display next to the exact fraction.
std::string to_decimal_string(const Rational& value);

/// Nearest double.
double to_double(const Rational& value);

}  // namespace entlab
