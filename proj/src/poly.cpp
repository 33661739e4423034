#include "bidisc/poly.hpp"

#include <cmath>
#include <limits>

#include "bidisc/errors.hpp"

namespace bidisc {

int BivariatePoly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.get(v)));
    return d;
}

Exp2 BivariatePoly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const GaussianRational& BivariatePoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void BivariatePoly::add_term(Exp2 e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(Exp2{ea.e1 + eb.e1, ea.e2 + eb.e2}, ca * cb);
    return r;
}

BivariatePoly BivariatePoly::scaled(const GaussianRational& c) const {
    BivariatePoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

BivariatePoly BivariatePoly::pow(long k) const {
    if (k < 0) throw DomainError("polynomial power with negative exponent");
    BivariatePoly result(1);
    BivariatePoly base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

BivariatePoly BivariatePoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

BivariatePoly BivariatePoly::derivative(Var v) const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) {
        std::uint32_t k = e.get(v);
        if (k == 0) continue;
        Exp2 de = e;
        (v == Var::z1 ? de.e1 : de.e2) = k - 1;
        r.add_term(de, c * GaussianRational(static_cast<long>(k)));
    }
    return r;
}

GaussianRational BivariatePoly::eval(const GaussianRational& z1, const GaussianRational& z2) const {
    // Exact Horner in z1 with inner Horner in z2 via the coefficient list.
    GaussianRational acc;
    auto cs = coeffs_in(Var::z1);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        GaussianRational inner;
        auto inner_cs = it->coeffs_in(Var::z2);
        for (auto jt = inner_cs.rbegin(); jt != inner_cs.rend(); ++jt)
            inner = inner * z2 + jt->constant_term();
        acc = acc * z1 + inner;
    }
    return acc;
}

namespace {

std::complex<double> ipow(std::complex<double> z, std::uint32_t k) {
    std::complex<double> r = 1.0;
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

double ipow(double x, std::uint32_t k) {
    double r = 1.0;
    while (k > 0) {
        if (k & 1) r *= x;
        x *= x;
        k >>= 1;
    }
    return r;
}

} // namespace

BivariatePoly::EvalResult BivariatePoly::eval(std::complex<double> z1, std::complex<double> z2) const {
    const double eps = std::numeric_limits<double>::epsilon();
    std::complex<double> acc = 0.0;
    double mag = 0.0;  // sum of |c| * |z1|^e1 * |z2|^e2
    double a1 = std::abs(z1), a2 = std::abs(z2);
    for (const auto& [e, c] : terms_) {
        acc += c.to_complex() * ipow(z1, e.e1) * ipow(z2, e.e2);
        mag += std::abs(c.to_complex()) * ipow(a1, e.e1) * ipow(a2, e.e2) * (e.total() + 2.0);
    }
    return {acc, mag * eps};
}

BivariatePoly BivariatePoly::scale_var(Var v, const GaussianRational& c) const {
    BivariatePoly r;
    for (const auto& [e, coef] : terms_) {
        GaussianRational factor(1);
        for (std::uint32_t k = 0; k < e.get(v); ++k) factor *= c;
        r.add_term(e, coef * factor);
    }
    return r;
}

std::vector<BivariatePoly> BivariatePoly::coeffs_in(Var v) const {
    std::vector<BivariatePoly> out(static_cast<std::size_t>(std::max(0, degree_in(v)) + 1));
    if (terms_.empty()) return {};
    for (const auto& [e, c] : terms_) {
        Exp2 rest = e;
        std::uint32_t k = e.get(v);
        (v == Var::z1 ? rest.e1 : rest.e2) = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

BivariatePoly BivariatePoly::assemble(Var v, const std::vector<BivariatePoly>& coeffs) {
    BivariatePoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exp2 full = e;
            (v == Var::z1 ? full.e1 : full.e2) += static_cast<std::uint32_t>(k);
            r.add_term(full, c);
        }
    }
    return r;
}

double BivariatePoly::coeff_scale() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_complex()));
    return m;
}

namespace {

bool is_negative_real_or_imag(const GaussianRational& c) {
    // Used only to pick the printed sign of a term.
    if (c.is_real()) return sgn(c.re()) < 0;
    if (sgn(c.re()) == 0) return sgn(c.im()) < 0;
    return false;  // genuinely complex coefficients print parenthesized with '+'
}

std::string monomial_str(Exp2 e) {
    std::string s;
    if (e.e1 > 0) {
        s += "z1";
        if (e.e1 > 1) s += "^" + std::to_string(e.e1);
    }
    if (e.e2 > 0) {
        if (!s.empty()) s += "*";
        s += "z2";
        if (e.e2 > 1) s += "^" + std::to_string(e.e2);
    }
    return s;
}

} // namespace

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        GaussianRational a = c;
        bool neg = is_negative_real_or_imag(a);
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_str(e);
        std::string cs;
        bool need_coeff = true;
        if (a.is_one() && !mono.empty()) need_coeff = false;
        if (need_coeff) {
            cs = a.str();
            bool complex_both = !a.is_real() && sgn(a.re()) != 0;
            if (complex_both) cs = "(" + cs + ")";
        }
        if (!cs.empty() && !mono.empty())
            out += cs + "*" + mono;
        else if (!mono.empty())
            out += mono;
        else
            out += cs;
    }
    return out;
}

bool poly_less(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        int c = grlex_cmp(ia->first, ib->first);
        if (c != 0) return c < 0;
        if (ia->second != ib->second) {
            // arbitrary but deterministic coefficient tie-break
            mpq_class da = ia->second.re() - ib->second.re();
            if (sgn(da) != 0) return sgn(da) < 0;
            return ia->second.im() < ib->second.im();
        }
    }
    return a.term_count() < b.term_count();
}

} // namespace bidisc
