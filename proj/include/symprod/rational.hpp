#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symprod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q" in lowest terms ("p" when the denominator is 1).
std::string to_fraction_string(const Rat& x);

/// 12-significant-digit decimal rendering, for display next to the exact value.
std::string to_decimal_string(const Rat& x, int significant_digits = 12);

/// Parses "a", "-a" or "a/b" into an exact rational. Throws std::invalid_argument.
Rat parse_rational(const std::string& text);

}  // namespace symprod
