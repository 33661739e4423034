#include "bidisc/poly_algo.hpp"

#include <algorithm>

#include "bidisc/errors.hpp"

namespace bidisc {

std::optional<BivariatePoly> divide_exact(const BivariatePoly& a, const BivariatePoly& b) {
    if (b.is_zero()) return std::nullopt;
    BivariatePoly rem = a, quot;
    Exp2 lb = b.leading_monomial();
    while (!rem.is_zero()) {
        Exp2 lr = rem.leading_monomial();
        if (lr.e1 < lb.e1 || lr.e2 < lb.e2) return std::nullopt;
        Exp2 q{lr.e1 - lb.e1, lr.e2 - lb.e2};
        GaussianRational qc = rem.leading_coeff() / b.leading_coeff();
        quot.add_term(q, qc);
        rem -= BivariatePoly::monomial(q, qc) * b;
    }
    return quot;
}

bool divides(const BivariatePoly& b, const BivariatePoly& a) { return divide_exact(a, b).has_value(); }

namespace {

bool depends_on(const BivariatePoly& p, Var v) { return p.degree_in(v) > 0; }

/// Euclidean gcd for polynomials in a single variable over Q(i), monic result.
BivariatePoly gcd_univariate(BivariatePoly a, BivariatePoly b, Var v) {
    while (!b.is_zero()) {
        // remainder of a by b in the single variable v
        BivariatePoly r = a;
        int db = b.degree_in(v);
        while (!r.is_zero() && r.degree_in(v) >= db) {
            int dr = r.degree_in(v);
            auto rc = r.coeffs_in(v);
            auto bc = b.coeffs_in(v);
            GaussianRational q = rc[static_cast<std::size_t>(dr)].constant_term() /
                                 bc[static_cast<std::size_t>(db)].constant_term();
            Exp2 shift = v == Var::z1 ? Exp2{static_cast<std::uint32_t>(dr - db), 0}
                                      : Exp2{0, static_cast<std::uint32_t>(dr - db)};
            r -= BivariatePoly::monomial(shift, q) * b;
        }
        a = b;
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

/// Pseudo-remainder of a by b in the main variable (coefficients in the
/// other variable's polynomial ring).
BivariatePoly pseudo_rem(const BivariatePoly& a, const BivariatePoly& b, Var main) {
    int db = b.degree_in(main);
    BivariatePoly lc_b = b.coeffs_in(main)[static_cast<std::size_t>(db)];
    BivariatePoly r = a;
    while (!r.is_zero() && r.degree_in(main) >= db) {
        int dr = r.degree_in(main);
        BivariatePoly lc_r = r.coeffs_in(main)[static_cast<std::size_t>(dr)];
        Exp2 shift = main == Var::z1 ? Exp2{static_cast<std::uint32_t>(dr - db), 0}
                                     : Exp2{0, static_cast<std::uint32_t>(dr - db)};
        r = r * lc_b - BivariatePoly::monomial(shift) * lc_r * b;
    }
    return r;
}

} // namespace

BivariatePoly content_in(const BivariatePoly& p, Var main) {
    if (p.is_zero()) return p;
    Var o = other(main);
    BivariatePoly c;
    for (const auto& coeff : p.coeffs_in(main)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff.monic() : gcd_univariate(c, coeff, o);
        if (c.is_constant()) return BivariatePoly(1);
    }
    return c;
}

BivariatePoly primitive_part_in(const BivariatePoly& p, Var main) {
    if (p.is_zero()) return p;
    auto q = divide_exact(p, content_in(p, main));
    return *q;
}

BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return BivariatePoly(1);

    bool a1 = depends_on(a, Var::z1), b1 = depends_on(b, Var::z1);
    if (a1 && b1) {
        // subresultant-style primitive PRS in z1
        BivariatePoly cont = gcd_univariate(content_in(a, Var::z1), content_in(b, Var::z1), Var::z2);
        BivariatePoly r0 = primitive_part_in(a, Var::z1);
        BivariatePoly r1 = primitive_part_in(b, Var::z1);
        if (r0.degree_in(Var::z1) < r1.degree_in(Var::z1)) std::swap(r0, r1);
        while (true) {
            BivariatePoly r2 = pseudo_rem(r0, r1, Var::z1);
            if (r2.is_zero()) break;
            if (r2.degree_in(Var::z1) == 0) return cont.monic();  // pp gcd is trivial
            r0 = r1;
            r1 = primitive_part_in(r2, Var::z1);
        }
        return (cont * primitive_part_in(r1, Var::z1)).monic();
    }
    if (!a1 && !b1) return gcd_univariate(a, b, Var::z2);
    // one side misses z1 entirely: the gcd divides it, hence lives in
    // Q(i)[z2]; reduce the other side to its z1-content first
    if (!b1) return gcd_univariate(content_in(a, Var::z1), b, Var::z2);
    return gcd_univariate(content_in(b, Var::z1), a, Var::z2);
}

BivariatePoly resultant(const BivariatePoly& a, const BivariatePoly& b, Var var) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant of a zero polynomial");
    int m = std::max(0, a.degree_in(var));
    int n = std::max(0, b.degree_in(var));
    if (m == 0 && n == 0) return BivariatePoly(1);
    if (m == 0) return a.pow(n);
    if (n == 0) return b.pow(m);

    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    const int N = m + n;
    std::vector<std::vector<BivariatePoly>> M(static_cast<std::size_t>(N),
                                              std::vector<BivariatePoly>(static_cast<std::size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = ac[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = bc[static_cast<std::size_t>(n - j)];

    // Bareiss fraction-free elimination; divisions are exact in Q(i)[z]
    BivariatePoly prev(1);
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < N; ++r)
                if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return BivariatePoly();  // singular: resultant 0
            std::swap(M[static_cast<std::size_t>(k)], M[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                BivariatePoly num = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * M[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                auto q = divide_exact(num, prev);
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *q;
            }
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = BivariatePoly();
        }
        prev = M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    BivariatePoly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    (void)sign;
    return det.monic();  // normalized: callers consume the zero set
}

std::vector<std::pair<BivariatePoly, int>> squarefree_factor(const BivariatePoly& p) {
    if (p.is_zero()) throw DomainError("square-free factorization of zero");
    if (p.is_constant()) return {};

    Var main = depends_on(p, Var::z1) ? Var::z1 : Var::z2;
    BivariatePoly cont = content_in(p, main);
    BivariatePoly pp = primitive_part_in(p, main);

    std::vector<std::pair<BivariatePoly, int>> factors;
    if (!cont.is_constant()) factors = squarefree_factor(cont);  // univariate in the other variable

    // Yun's algorithm on the primitive part, derivative taken in `main`
    BivariatePoly f = pp.monic();
    if (!f.is_constant()) {
        BivariatePoly df = f.derivative(main);
        BivariatePoly g = gcd(f, df);
        BivariatePoly c = *divide_exact(f, g);
        BivariatePoly d = *divide_exact(df, g) - c.derivative(main);
        int mult = 1;
        while (!c.is_constant()) {
            BivariatePoly h = gcd(c, d);
            if (!h.is_constant()) factors.emplace_back(h.monic(), mult);
            c = *divide_exact(c, h);
            d = *divide_exact(d, h) - c.derivative(main);
            ++mult;
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return factors;
}

BivariatePoly squarefree_part(const BivariatePoly& p) {
    BivariatePoly r(1);
    for (const auto& [f, mult] : squarefree_factor(p)) r *= f;
    return r;
}

} // namespace bidisc
