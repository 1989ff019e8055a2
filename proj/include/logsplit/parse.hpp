#pragma once
#include <string>
#include <vector>

#include "logsplit/poly.hpp"

namespace logsplit {

// Parses a homogeneous polynomial in x, y, z with rational coefficients.
// Grammar: sum of terms with +, -, unary minus, *, ^ (positive integer
// exponents), parentheses. Multiplication must be explicit ("2*x", not "2x").
// Throws ParseError on syntax errors and on inhomogeneous or zero input.
HomPoly parse_poly(const std::string& text);

// Parses a line arrangement: one line per row as three rationals "a b c",
// blank lines and '#' comments ignored. Rows must be pairwise distinct as
// projective lines. Throws ParseError otherwise.
std::vector<LinForm> parse_arrangement(const std::string& text);

}  // namespace logsplit
