#include "bidisc/groebner.hpp"

#include <algorithm>
#include <optional>

#include "bidisc/errors.hpp"

namespace bidisc::kernel {

namespace {

std::uint32_t total(const Exp3& e) { return e[0] + e[1] + e[2]; }

int grlex3(const Exp3& a, const Exp3& b) {
    std::uint32_t ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb ? -1 : 1;
    for (int k = 0; k < 3; ++k)
        if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)])
            return a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(k)] ? -1 : 1;
    return 0;
}

int block(const Exp3& a, const Exp3& b, int first) {
    if (a[static_cast<std::size_t>(first)] != b[static_cast<std::size_t>(first)])
        return a[static_cast<std::size_t>(first)] < b[static_cast<std::size_t>(first)] ? -1 : 1;
    return grlex3(a, b);
}

bool divides_exp(const Exp3& a, const Exp3& b) {  // a | b
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exp3 lcm_exp(const Exp3& a, const Exp3& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

Exp3 sub_exp(const Exp3& a, const Exp3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Exp3 add_exp(const Exp3& a, const Exp3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

} // namespace

int cmp(Order o, const Exp3& a, const Exp3& b) {
    switch (o) {
        case Order::GRLEX: return grlex3(a, b);
        case Order::ELIM_T: return block(a, b, 2);
        case Order::ELIM_Z1: return block(a, b, 0);
        case Order::ELIM_Z2: return block(a, b, 1);
    }
    return 0;
}

KPoly from_bivariate(const BivariatePoly& p, Order order) {
    KPoly r;
    r.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) r.push_back(Term{Exp3{e.e1, e.e2, 0}, c});
    std::sort(r.begin(), r.end(), [order](const Term& a, const Term& b) { return cmp(order, a.exp, b.exp) > 0; });
    return r;
}

BivariatePoly to_bivariate(const KPoly& p) {
    BivariatePoly r;
    for (const auto& t : p) {
        if (t.exp[2] != 0) throw DomainError("internal: auxiliary variable leaked into a bivariate result");
        r.add_term(Exp2{t.exp[0], t.exp[1]}, t.coeff);
    }
    return r;
}

KPoly add(const KPoly& a, const KPoly& b, Order order) {
    KPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = cmp(order, a[i].exp, b[j].exp);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(b[j++]);
        } else {
            GaussianRational s = a[i].coeff + b[j].coeff;
            if (!s.is_zero()) r.push_back(Term{a[i].exp, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

KPoly sub(const KPoly& a, const KPoly& b, Order order) {
    KPoly nb = b;
    for (auto& t : nb) t.coeff = -t.coeff;
    return add(a, nb, order);
}

KPoly mul_term(const KPoly& a, const Term& t, Order) {
    KPoly r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(Term{add_exp(x.exp, t.exp), x.coeff * t.coeff});
    return r;  // multiplying by a monomial preserves the sort
}

KPoly mul(const KPoly& a, const KPoly& b, Order order) {
    KPoly r;
    for (const auto& t : b) r = add(r, mul_term(a, t, order), order);
    return r;
}

KPoly monic(KPoly p) {
    if (p.empty()) return p;
    GaussianRational inv = p.front().coeff.inverse();
    for (auto& t : p) t.coeff = t.coeff * inv;
    return p;
}

KPoly normal_form(const KPoly& f, const std::vector<KPoly>& basis, Order order) {
    KPoly rem = f, out;
    while (!rem.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (divides_exp(g.front().exp, rem.front().exp)) {
                Term q{sub_exp(rem.front().exp, g.front().exp), rem.front().coeff / g.front().coeff};
                rem = sub(rem, mul_term(g, q, order), order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.push_back(rem.front());
            rem.erase(rem.begin());
        }
    }
    return out;
}

namespace {

struct Pair {
    std::size_t i, j;
    Exp3 lcm;
    std::uint32_t sugar;
};

std::size_t term_total(const std::vector<KPoly>& basis) {
    std::size_t n = 0;
    for (const auto& p : basis) n += p.size();
    return n;
}

std::vector<KPoly> autoreduce(std::vector<KPoly> basis, Order order) {
    // drop redundant leading terms, then fully reduce each element
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || basis[j].empty()) continue;
                if (divides_exp(basis[j].front().exp, basis[i].front().exp)) {
                    basis[i].clear();
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<KPoly> kept;
    for (auto& p : basis)
        if (!p.empty()) kept.push_back(std::move(p));
    std::vector<KPoly> out(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<KPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        out[i] = monic(normal_form(kept[i], others, order));
    }
    std::erase_if(out, [](const KPoly& p) { return p.empty(); });
    std::sort(out.begin(), out.end(),
              [order](const KPoly& a, const KPoly& b) { return cmp(order, a.front().exp, b.front().exp) < 0; });
    return out;
}

} // namespace

std::vector<KPoly> buchberger(std::vector<KPoly> gens, Order order, const BuchbergerLimits& lim) {
    std::erase_if(gens, [](const KPoly& p) { return p.empty(); });
    if (gens.empty()) return {};
    // deterministic processing order: (total degree, exponent-lex)
    std::sort(gens.begin(), gens.end(), [order](const KPoly& a, const KPoly& b) {
        std::uint32_t ta = total(a.front().exp), tb = total(b.front().exp);
        if (ta != tb) return ta < tb;
        return cmp(order, a.front().exp, b.front().exp) < 0;
    });

    std::vector<KPoly> basis;
    std::vector<std::uint32_t> sugar;
    std::vector<Pair> pairs;

    auto push_poly = [&](KPoly p, std::uint32_t sug) {
        p = monic(std::move(p));
        std::size_t idx = basis.size();
        for (std::size_t i = 0; i < idx; ++i) {
            if (basis[i].empty()) continue;
            const Exp3& li = basis[i].front().exp;
            const Exp3& lp = p.front().exp;
            Exp3 l = lcm_exp(li, lp);
            if (l == add_exp(li, lp)) continue;  // coprime leading monomials: S-poly reduces to zero
            std::uint32_t s = std::max(sugar[i] + total(sub_exp(l, li)), sug + total(sub_exp(l, lp)));
            pairs.push_back(Pair{i, idx, l, s});
        }
        basis.push_back(std::move(p));
        sugar.push_back(sug);
    };

    for (auto& g : gens) {
        std::uint32_t s = total(g.front().exp);
        push_poly(std::move(g), s);
    }

    while (!pairs.empty()) {
        if (term_total(basis) > lim.term_cap)
            throw ResourceError("Groebner term cap exceeded (" + std::to_string(lim.term_cap) + ")");
        auto best = std::min_element(pairs.begin(), pairs.end(), [order](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = cmp(order, a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        Pair pr = *best;
        pairs.erase(best);
        const KPoly& fi = basis[pr.i];
        const KPoly& fj = basis[pr.j];
        if (fi.empty() || fj.empty()) continue;
        Term mi{sub_exp(pr.lcm, fi.front().exp), GaussianRational(1) / fi.front().coeff};
        Term mj{sub_exp(pr.lcm, fj.front().exp), GaussianRational(1) / fj.front().coeff};
        KPoly s = sub(mul_term(fi, mi, order), mul_term(fj, mj, order), order);
        KPoly nf = normal_form(s, basis, order);
        if (!nf.empty()) push_poly(std::move(nf), pr.sugar);
    }

    return autoreduce(std::move(basis), order);
}

} // namespace bidisc::kernel
