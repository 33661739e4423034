#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

/// Quotient a/b when b divides a exactly; nullopt otherwise.
std::optional<BivariatePoly> divide_exact(const BivariatePoly& a, const BivariatePoly& b);

/// True iff b | a (exact division test).
bool divides(const BivariatePoly& b, const BivariatePoly& a);

/// Content of p as a univariate polynomial in `main`: the gcd of its
/// coefficients, which live in Q(i)[other(main)].
BivariatePoly content_in(const BivariatePoly& p, Var main);
BivariatePoly primitive_part_in(const BivariatePoly& p, Var main);

/// Monic-normalized gcd via the primitive subresultant-style PRS
/// (pseudo-remainders with content removal each step). Errors when both
/// inputs are zero.
BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b);

/// Resultant eliminating `var` (Sylvester determinant, fraction-free
/// Bareiss elimination over the polynomial ring), monic-normalized: the
/// zero set is what downstream point extraction consumes. The result is a
/// polynomial in the remaining variable. Errors on zero input.
BivariatePoly resultant(const BivariatePoly& a, const BivariatePoly& b, Var var);

/// Square-free decomposition: p = unit * prod factor^multiplicity with
/// pairwise-coprime square-free monic factors. Constants give an empty list.
std::vector<std::pair<BivariatePoly, int>> squarefree_factor(const BivariatePoly& p);

/// Product of the distinct square-free factors (radical of a principal ideal).
BivariatePoly squarefree_part(const BivariatePoly& p);

} // namespace bidisc
