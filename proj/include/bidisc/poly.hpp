#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bidisc/gaussian_rational.hpp"

namespace bidisc {

enum class Var : int { z1 = 0, z2 = 1 };

inline Var other(Var v) { return v == Var::z1 ? Var::z2 : Var::z1; }

/// Exponent pair of a bivariate monomial z1^e1 * z2^e2.
struct Exp2 {
    std::uint32_t e1 = 0, e2 = 0;

    std::uint32_t total() const { return e1 + e2; }
    std::uint32_t get(Var v) const { return v == Var::z1 ? e1 : e2; }
    friend bool operator==(Exp2 a, Exp2 b) { return a.e1 == b.e1 && a.e2 == b.e2; }
};

/// Graded lexicographic order with z1 > z2, the fixed monomial order for
/// all normalization in this library.
inline int grlex_cmp(Exp2 a, Exp2 b) {
    if (a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
    if (a.e1 != b.e1) return a.e1 < b.e1 ? -1 : 1;
    return 0;
}

/// Map comparator placing the grlex-largest monomial first.
struct GrlexDesc {
    bool operator()(Exp2 a, Exp2 b) const { return grlex_cmp(a, b) > 0; }
};

/// Sparse exact polynomial in C[z1,z2] with Gaussian-rational coefficients.
/// Terms are stored grlex-descending; no zero coefficient is ever stored,
/// so the zero polynomial has an empty term map and equality is structural.
class BivariatePoly {
public:
    using TermMap = std::map<Exp2, GaussianRational, GrlexDesc>;

    BivariatePoly() = default;
    explicit BivariatePoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[Exp2{0, 0}] = c;
    }
    BivariatePoly(long n) : BivariatePoly(GaussianRational(n)) {}

    static BivariatePoly variable(Var v) { return monomial(v == Var::z1 ? Exp2{1, 0} : Exp2{0, 1}); }
    static BivariatePoly monomial(Exp2 e, GaussianRational c = GaussianRational(1)) {
        BivariatePoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0}); }
    std::size_t term_count() const { return terms_.size(); }

    /// Max total degree; the zero polynomial reports -1.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total()); }
    int degree_in(Var v) const;

    Exp2 leading_monomial() const;          // grlex-largest
    const GaussianRational& leading_coeff() const;
    GaussianRational coeff(Exp2 e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(Exp2{0, 0}); }

    void set_coeff(Exp2 e, const GaussianRational& c) {
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    void add_term(Exp2 e, const GaussianRational& c);

    BivariatePoly operator-() const;
    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

    BivariatePoly scaled(const GaussianRational& c) const;
    /// p^k for k >= 0; negative k is a domain error.
    BivariatePoly pow(long k) const;

    /// Leading coefficient normalized to 1 (zero stays zero).
    BivariatePoly monic() const;

    BivariatePoly derivative(Var v) const;

    /// Exact evaluation.
    GaussianRational eval(const GaussianRational& z1, const GaussianRational& z2) const;

    /// Floating evaluation with a running first-order roundoff bound.
    struct EvalResult {
        std::complex<double> value;
        double error_bound;
    };
    EvalResult eval(std::complex<double> z1, std::complex<double> z2) const;
    std::complex<double> eval_value(std::complex<double> z1, std::complex<double> z2) const {
        return eval(z1, z2).value;
    }

    /// Substitute v -> c*v (exact); used for the radial shrink p((1-1/k)z1, z2).
    BivariatePoly scale_var(Var v, const GaussianRational& c) const;

    /// Coefficients of *this viewed as a univariate polynomial in `v`,
    /// index = exponent of `v`; entries are polynomials in the other variable.
    std::vector<BivariatePoly> coeffs_in(Var v) const;
    static BivariatePoly assemble(Var v, const std::vector<BivariatePoly>& coeffs);

    /// max |coefficient| as a double, a scale for residual tolerances.
    double coeff_scale() const;

    std::string str() const;  // canonical text in the parse grammar

private:
    TermMap terms_;
};

/// Deterministic ordering for polynomial lists (grlex on leading monomials,
/// then term-by-term); not a mathematical order, just a tie-breaker.
bool poly_less(const BivariatePoly& a, const BivariatePoly& b);

} // namespace bidisc
