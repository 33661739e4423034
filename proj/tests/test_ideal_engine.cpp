#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bidisc/decompose.hpp"
#include "bidisc/errors.hpp"
#include "bidisc/ideal.hpp"
#include "bidisc/parse.hpp"
#include "bidisc/poly_algo.hpp"
#include "test_util.hpp"

using namespace bidisc;
using testutil::P;

namespace {

Ideal I(const char* text) { return Ideal(parse_ideal_text(text)); }

// Buchberger criterion oracle: every S-polynomial of the basis reduces to 0.
bool all_spolys_reduce(const GroebnerBasis& gb) {
    using namespace bidisc::kernel;
    std::vector<KPoly> basis;
    for (const auto& p : gb.polys) basis.push_back(from_bivariate(p, Order::GRLEX));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto& fi = basis[i];
            const auto& fj = basis[j];
            Exp3 l{std::max(fi.front().exp[0], fj.front().exp[0]),
                   std::max(fi.front().exp[1], fj.front().exp[1]),
                   std::max(fi.front().exp[2], fj.front().exp[2])};
            Term mi{{l[0] - fi.front().exp[0], l[1] - fi.front().exp[1], l[2] - fi.front().exp[2]},
                    GaussianRational(1) / fi.front().coeff};
            Term mj{{l[0] - fj.front().exp[0], l[1] - fj.front().exp[1], l[2] - fj.front().exp[2]},
                    GaussianRational(1) / fj.front().coeff};
            KPoly s = sub(mul_term(fi, mi, Order::GRLEX), mul_term(fj, mj, Order::GRLEX), Order::GRLEX);
            if (!normal_form(s, basis, Order::GRLEX).empty()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("groebner: spec examples") {
    auto gb1 = I("z1^2; z1*z2").groebner();
    REQUIRE(gb1.polys.size() == 2);
    CHECK(gb1.polys[0] == P("z1*z2"));
    CHECK(gb1.polys[1] == P("z1^2"));

    // reduction oracle: z2*(z1-1/2) reduces to zero against z1-1/2
    auto gb2 = I("z1 - 1/2; z2*(z1-1/2)").groebner();
    REQUIRE(gb2.polys.size() == 1);
    CHECK(gb2.polys[0] == P("z1-1/2"));

    auto gb3 = I("z1; z2; 1").groebner();
    REQUIRE(gb3.is_unit());
}

TEST_CASE("groebner: idempotence and Buchberger criterion") {
    std::vector<const char*> cases = {
        "z1^2; z1*z2",
        "z1*z2 - 1; z1 - 1/2",
        "(z1*z2-1)*(z1-1/2)",
        "z1^2 - z2; z2^2 - z1",
        "z1^3 - 2*z2 + 1; z1*z2 - z2^2; z1 + z2 - 1",
        "(1/2+1/3*i)*z1^2*z2 - z2 + 1; z1*z2^2 + i*z1",
    };
    for (auto* text : cases) {
        auto gb = I(text).groebner();
        CHECK(all_spolys_reduce(gb));
        Ideal regen(gb.polys);
        CHECK(regen.groebner() == gb);
    }
}

TEST_CASE("member: spec examples") {
    CHECK(member(P("z1^2*z2"), I("z1^2; z1*z2")).member);
    auto r = member(P("1"), I("z1 - 1/2; z2"));
    CHECK_FALSE(r.member);
    CHECK(r.normal_form == P("1"));
    CHECK(member(P("(z1*z2-1)*(z1-1/2)"), I("(z1*z2-1)*(z1-1/2)")).member);
}

TEST_CASE("colon: spec examples and membership cross-check") {
    auto c1 = colon(I("(z1*z2-1)*(z1-1/2)"), P("z1*z2-1"));
    CHECK(c1 == I("z1 - 1/2"));
    CHECK(colon(I("z1"), P("z2")) == I("z1"));
    CHECK(colon(I("z1*z2 - 1; z1^2 - z2"), P("1")) == I("z1*z2 - 1; z1^2 - z2"));
    CHECK_THROWS_AS(colon(I("z1"), BivariatePoly()), DomainError);

    // membership cross-check oracle: g in (I:f) => g*f in I
    std::mt19937 rng(5150);
    auto base = I("(z1*z2-1)*(z1-1/2); z2*(z1-1/2)^2");
    auto f = P("z1*z2-1");
    auto c = colon(base, f);
    for (const auto& g : c.generators()) CHECK(member(g * f, base).member);
    for (int rep = 0; rep < 20; ++rep) {
        BivariatePoly combo;
        for (const auto& g : c.generators()) combo += g * testutil::random_poly(rng, 2, 3);
        CHECK(member(combo * f, base).member);
    }
}

TEST_CASE("intersect: spec examples") {
    CHECK(intersect(I("z1"), I("z2")) == I("z1*z2"));
    auto J = I("z1*z2 - 1; z1 + z2");
    CHECK(intersect(J, Ideal::unit()) == J);
    // containment oracle
    auto K = intersect(I("z1 - 1/2"), I("z1 - 1/2; z2"));
    CHECK(K == I("z1 - 1/2"));
    for (const auto& g : K.generators()) {
        CHECK(member(g, I("z1 - 1/2")).member);
        CHECK(member(g, I("z1 - 1/2; z2")).member);
    }
}

TEST_CASE("saturate removes a component completely") {
    auto s = saturate(I("(z1-1/2)^3 * (z1*z2-1)"), P("z1-1/2"));
    CHECK(s == I("z1*z2-1"));
    CHECK(saturate(I("z1^2; z1*z2"), P("z1")).is_unit_ideal());
}

TEST_CASE("eliminant") {
    auto J = I("z1 - 1/2; z2 - 1/3");
    CHECK(eliminant(J, Var::z1) == P("z1 - 1/2"));
    CHECK(eliminant(J, Var::z2) == P("z2 - 1/3"));
    CHECK(eliminant(I("z1*z2 - 1"), Var::z1).is_zero());  // no univariate member
    auto sq = I("z1^2; z2");
    CHECK(eliminant(sq, Var::z1) == P("z1^2"));
}

TEST_CASE("radical: spec examples") {
    CHECK(radical(I("(z1-z2)^2")) == I("z1-z2"));
    CHECK(radical(I("z1^2; z2")) == I("z1; z2"));
    auto prime = I("z1*z2 - 1");
    CHECK(radical(prime) == prime);
    auto max_ideal = I("z1 - 1/2; z2");
    CHECK(radical(max_ideal) == max_ideal);
}

TEST_CASE("radical: idempotence and containment on a corpus") {
    std::vector<const char*> corpus = {
        "(z1-z2)^2",
        "z1^2; z2",
        "z1*z2 - 1",
        "z1 - 1/2; z2",
        "(z1*z2-1)*(z1-1/2)",
        "(z1-1/2)^2*(z2-1/3)",
        "z1^3; z1*z2; z2^2",
        "(z1+z2)^2*(z1-z2)",
        "z1^2 - z2^2",
        "(z1^2+1)*(z2-1/2)",
        "z1^2 - 1/4; z2",
        "z1*z2; z2^2 - z2",
        "(z1-i)*(z1+i)",
        "z1^4",
        "z2^3 - z2",
        "z1^2*z2^2",
        "(z1-1/2)*(z2-1/3); (z1-1/2)*(z2+1/3)",
        "z1^2 + z2^2 - 1; z1 - z2",
        "(2*z1*z2+z1+z2+2)^2",
        "z1^2 - 2*z1*z2 + z2^2",
    };
    for (auto* text : corpus) {
        CAPTURE(text);
        auto J = I(text);
        auto r = radical(J);
        CHECK(radical(r) == r);
        CHECK(contains(r, J));  // I subset of radical(I)
    }
}

TEST_CASE("radical: membership of powers") {
    // every generator f of radical(I) has f^k in I for k <= a degree bound
    std::vector<const char*> corpus = {"(z1-z2)^2", "z1^2; z2", "z1^3; z1*z2; z2^2", "(z1-1/2)^2*(z2-1/3)"};
    for (auto* text : corpus) {
        CAPTURE(text);
        auto J = I(text);
        auto r = radical(J);
        for (const auto& f : r.generators()) {
            bool found = false;
            BivariatePoly fk(1);
            for (int k = 1; k <= 12 && !found; ++k) {
                fk *= f;
                found = member(fk, J).member;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("groebner resource cap trips") {
    auto J = I("z1^9 - z2^3 + 1; z1*z2^7 - z1 - 1; z1^5*z2^5 - z2 - 2");
    CHECK_THROWS_AS(J.groebner(10), ResourceError);
}
