#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qes {

// Exact arbitrary-precision arithmetic used throughout the symbolic layer.
// No floating point enters any algebraic computation; doubles appear only in
// grid numerics and output formatting.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p/q" or an exact decimal such as "0.25" (read literally in
// base 10, so 0.1 becomes 1/10 exactly).  Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with
// q > 0 and the sign on the numerator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace qes
