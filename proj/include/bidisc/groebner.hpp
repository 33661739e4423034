#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

/// Internal polynomial kernel used by the ideal engine. Everything public
/// remains bivariate; the third slot exists only for the one auxiliary
/// variable of the elimination trick (intersections, colons) and for
/// computing eliminants.
namespace kernel {

using Exp3 = std::array<std::uint32_t, 3>;  // exponents of (z1, z2, t)

/// Monomial orders. GRLEX is the library-wide graded lex with z1 > z2
/// (> t, unused for bivariate input). The ELIM_* orders are block orders
/// that make the named variable infinitely large, grading the rest.
enum class Order { GRLEX, ELIM_T, ELIM_Z1, ELIM_Z2 };

int cmp(Order o, const Exp3& a, const Exp3& b);

struct Term {
    Exp3 exp;
    GaussianRational coeff;
};

/// Terms sorted descending under the active order; invariant maintained by
/// every operation here (the order is passed explicitly, CLPoly-style).
using KPoly = std::vector<Term>;

KPoly from_bivariate(const BivariatePoly& p, Order order);
BivariatePoly to_bivariate(const KPoly& p);  // requires t-exponent 0 throughout

KPoly add(const KPoly& a, const KPoly& b, Order order);
KPoly sub(const KPoly& a, const KPoly& b, Order order);
KPoly mul_term(const KPoly& a, const Term& t, Order order);
KPoly mul(const KPoly& a, const KPoly& b, Order order);
KPoly monic(KPoly p);

/// Full normal form of f modulo G (every term reduced).
KPoly normal_form(const KPoly& f, const std::vector<KPoly>& basis, Order order);

struct BuchbergerLimits {
    std::size_t term_cap = 200000;  // total stored terms across the working basis
};

/// Reduced Groebner basis (auto-reduced, monic, sorted by leading monomial
/// ascending) via Buchberger with sugar-strategy pair selection.
/// Throws ResourceError when the term cap trips.
std::vector<KPoly> buchberger(std::vector<KPoly> gens, Order order, const BuchbergerLimits& lim = {});

} // namespace kernel
} // namespace bidisc
