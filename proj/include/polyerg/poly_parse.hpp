#pragma once

#include <string>

#include "polyerg/polynomial.hpp"

namespace polyerg {

/// Parses integer-coefficient expressions in the variable n, e.g.
/// "(n^2-13)*(n^2-17)*(n^2-221)". Supports +, -, *, ^, parentheses and
/// integer literals; throws ArgumentError on malformed input.
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace polyerg
