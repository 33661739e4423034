#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bidisc/groebner.hpp"
#include "bidisc/poly.hpp"

namespace bidisc {

/// Reduced Groebner basis under the fixed grlex(z1 > z2) order: monic,
/// auto-reduced, sorted by leading monomial. Unique per ideal, so equality
/// of bases is equality of ideals.
struct GroebnerBasis {
    std::vector<BivariatePoly> polys;

    bool is_unit() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.polys == b.polys; }
};

/// An ideal of C[z1,z2] given by generators; the reduced basis is computed
/// on demand, once, and shared by copies.
class Ideal {
public:
    explicit Ideal(std::vector<BivariatePoly> generators);
    static Ideal unit() { return Ideal({BivariatePoly(1)}); }

    const std::vector<BivariatePoly>& generators() const { return gens_; }
    const GroebnerBasis& groebner(std::size_t term_cap = kernel::BuchbergerLimits{}.term_cap) const;

    bool is_unit_ideal() const { return groebner().is_unit(); }
    std::string str() const;  // semicolon-separated generator list

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.groebner() == b.groebner(); }

private:
    std::vector<BivariatePoly> gens_;
    struct Cache {
        std::once_flag flag;
        std::optional<GroebnerBasis> gb;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Membership: true iff the normal form of f modulo the reduced basis is
/// zero; the normal form is returned either way.
struct MemberResult {
    bool member;
    BivariatePoly normal_form;
};
MemberResult member(const BivariatePoly& f, const Ideal& I);

/// (I : f) = {g : g*f in I}; f must be nonzero.
Ideal colon(const Ideal& I, const BivariatePoly& f);

/// (I : f^inf), computed by iterating colon until the basis stabilizes.
Ideal saturate(const Ideal& I, const BivariatePoly& f);

/// I cap J via the elimination trick t*I + (1-t)*J under a block order.
Ideal intersect(const Ideal& I, const Ideal& J);

/// Monic generator of the elimination ideal I cap Q(i)[keep]; zero when the
/// elimination ideal is trivial, constant 1 when I is the unit ideal.
BivariatePoly eliminant(const Ideal& I, Var keep);

/// Radical: square-free part of the principal component intersected with
/// the radical of the zero-dimensional residual (square-free eliminants).
Ideal radical(const Ideal& I);

/// Fold of gcd over all generators: the principal part of the ideal
/// (constant 1 when the generators are coprime).
BivariatePoly principal_part(const Ideal& I);

/// True iff every generator of J is a member of I (J subset of I).
bool contains(const Ideal& I, const Ideal& J);

} // namespace bidisc
