#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

/// Parse the polynomial text grammar:
///   terms joined by + / -, products with *, exponent ^k, variables z1 z2,
///   imaginary unit i, rational literals a/b, decimal literals (snapped to
///   rationals within 1e-12 relative), parentheses.
/// Example: (1/2+1/3*i)*z1^2*z2 - z2 + 1
/// Whitespace is insignificant. Errors throw ParseError with line/column.
BivariatePoly parse_poly(std::string_view text);

/// Semicolon-separated polynomial list.
std::vector<BivariatePoly> parse_ideal_text(std::string_view text);

/// A single complex number in the coefficient grammar ("1/2", "0.3+2*i", ...).
GaussianRational parse_coefficient(std::string_view text);

} // namespace bidisc
