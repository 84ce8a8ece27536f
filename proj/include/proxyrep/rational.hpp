#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace proxyrep {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with a positive denominator.
// Every coordinate, threshold, and bisector in this library is a Rat;
// there is no floating point anywhere in the solvers.
using Rat = boost::multiprecision::cpp_rational;

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Parses "7", "-3", or "11/30". Decimal literals ("0.5"), whitespace, and
// non-positive denominators are rejected.
std::optional<Rat> try_parse_rational(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rat& value);

// LCM of the denominators of `values` (at least 1).
BigInt denominator_lcm(const std::vector<Rat>& values);

}  // namespace proxyrep
