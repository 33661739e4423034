#include "bidisc/ideal.hpp"

#include <algorithm>

#include "bidisc/errors.hpp"
#include "bidisc/poly_algo.hpp"

namespace bidisc {

using kernel::KPoly;
using kernel::Order;

Ideal::Ideal(std::vector<BivariatePoly> generators) {
    for (auto& g : generators)
        if (!g.is_zero()) gens_.push_back(std::move(g));
    if (gens_.empty()) throw DomainError("ideal needs at least one nonzero generator");
    std::sort(gens_.begin(), gens_.end(), poly_less);
}

const GroebnerBasis& Ideal::groebner(std::size_t term_cap) const {
    std::call_once(cache_->flag, [&] {
        std::vector<KPoly> gens;
        gens.reserve(gens_.size());
        for (const auto& g : gens_) gens.push_back(kernel::from_bivariate(g, Order::GRLEX));
        auto basis = kernel::buchberger(std::move(gens), Order::GRLEX, kernel::BuchbergerLimits{term_cap});
        GroebnerBasis gb;
        for (const auto& p : basis) gb.polys.push_back(kernel::to_bivariate(p));
        cache_->gb = std::move(gb);
    });
    return *cache_->gb;
}

std::string Ideal::str() const {
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += "; ";
        s += gens_[i].str();
    }
    return s;
}

MemberResult member(const BivariatePoly& f, const Ideal& I) {
    const auto& gb = I.groebner();
    std::vector<KPoly> basis;
    basis.reserve(gb.polys.size());
    for (const auto& g : gb.polys) basis.push_back(kernel::from_bivariate(g, Order::GRLEX));
    KPoly nf = kernel::normal_form(kernel::from_bivariate(f, Order::GRLEX), basis, Order::GRLEX);
    BivariatePoly nfp = kernel::to_bivariate(nf);
    return {nfp.is_zero(), std::move(nfp)};
}

namespace {

KPoly embed_with_t(const BivariatePoly& p, bool times_t, bool times_one_minus_t) {
    KPoly base = kernel::from_bivariate(p, Order::ELIM_T);
    if (!times_t && !times_one_minus_t) return base;
    KPoly result;
    for (const auto& term : base) {
        kernel::Exp3 et = term.exp;
        et[2] += 1;
        if (times_t) {
            result = kernel::add(result, KPoly{kernel::Term{et, term.coeff}}, Order::ELIM_T);
        } else {  // (1 - t) * term
            result = kernel::add(result, KPoly{kernel::Term{term.exp, term.coeff}}, Order::ELIM_T);
            result = kernel::add(result, KPoly{kernel::Term{et, -term.coeff}}, Order::ELIM_T);
        }
    }
    return result;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    std::vector<KPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(embed_with_t(g, true, false));
    for (const auto& g : J.generators()) gens.push_back(embed_with_t(g, false, true));
    auto basis = kernel::buchberger(std::move(gens), Order::ELIM_T);
    std::vector<BivariatePoly> kept;
    for (const auto& p : basis) {
        bool has_t = std::any_of(p.begin(), p.end(), [](const kernel::Term& t) { return t.exp[2] > 0; });
        if (!has_t) kept.push_back(kernel::to_bivariate(p));
    }
    if (kept.empty()) throw ResourceError("intersection produced no generators (unexpected)");
    return Ideal(std::move(kept));
}

Ideal colon(const Ideal& I, const BivariatePoly& f) {
    if (f.is_zero()) throw DomainError("colon ideal by the zero polynomial");
    if (f.is_constant()) return I;
    Ideal If = intersect(I, Ideal({f}));
    std::vector<BivariatePoly> quots;
    for (const auto& g : If.generators()) {
        auto q = divide_exact(g, f);
        if (!q) throw ResourceError("colon: generator of I cap (f) not divisible by f");
        if (!q->is_zero()) quots.push_back(std::move(*q));
    }
    return Ideal(std::move(quots));
}

Ideal saturate(const Ideal& I, const BivariatePoly& f) {
    if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
    Ideal cur = I;
    for (int round = 0; round < 64; ++round) {
        Ideal next = colon(cur, f);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw ResourceError("saturation did not stabilize");
}

BivariatePoly eliminant(const Ideal& I, Var keep) {
    Order order = keep == Var::z1 ? Order::ELIM_Z2 : Order::ELIM_Z1;
    std::vector<KPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(kernel::from_bivariate(g, order));
    auto basis = kernel::buchberger(std::move(gens), order);
    BivariatePoly result;
    Var eliminated = other(keep);
    for (const auto& p : basis) {
        BivariatePoly q = kernel::to_bivariate(p);
        if (q.degree_in(eliminated) > 0) continue;
        result = result.is_zero() ? q : gcd(result, q);
    }
    return result.is_zero() ? result : result.monic();
}

BivariatePoly principal_part(const Ideal& I) {
    BivariatePoly g;
    for (const auto& p : I.generators()) g = g.is_zero() ? p.monic() : gcd(g, p);
    return g.is_constant() ? BivariatePoly(1) : g;
}

Ideal radical(const Ideal& I) {
    if (I.is_unit_ideal()) return Ideal::unit();
    BivariatePoly p = principal_part(I);
    bool has_curve = !p.is_constant();
    BivariatePoly curve_rad = has_curve ? squarefree_part(p) : BivariatePoly(1);

    Ideal zero_dim = has_curve ? saturate(I, p) : I;
    if (zero_dim.is_unit_ideal()) {
        if (!has_curve) return Ideal::unit();
        return Ideal({curve_rad});
    }
    // Zero-dimensional radical: adjoin the square-free parts of both
    // eliminants (the resulting ideal contains a square-free univariate in
    // each variable, hence is radical, and cuts the same points).
    std::vector<BivariatePoly> gens = zero_dim.generators();
    for (Var v : {Var::z1, Var::z2}) {
        BivariatePoly e = eliminant(zero_dim, v);
        if (!e.is_zero() && !e.is_constant()) gens.push_back(squarefree_part(e));
    }
    Ideal zd_rad{std::move(gens)};
    if (!has_curve) return zd_rad;
    return intersect(Ideal({curve_rad}), zd_rad);
}

bool contains(const Ideal& I, const Ideal& J) {
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const BivariatePoly& g) { return member(g, I).member; });
}

} // namespace bidisc
