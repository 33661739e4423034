#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "bidisc/errors.hpp"
#include "bidisc/parse.hpp"
#include "bidisc/poly.hpp"
#include "bidisc/poly_algo.hpp"
#include "bidisc/univariate.hpp"
#include "test_util.hpp"

using namespace bidisc;
using testutil::P;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(mpq_class(1, 2), mpq_class(1, 3));
    GaussianRational b(mpq_class(-2, 5), mpq_class(1, 1));
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
    CHECK(a.norm2() == mpq_class(1, 4) + mpq_class(1, 9));
}

TEST_CASE("rationalize snaps floats") {
    CHECK(rationalize(0.5) == mpq_class(1, 2));
    CHECK(rationalize(1.0 / 3.0) == mpq_class(1, 3));
    CHECK(rationalize(-0.125) == mpq_class(-1, 8));
    CHECK(rationalize(3.0) == 3);
}

TEST_CASE("ring ops: difference of squares and absorbing zero") {
    CHECK(P("z1+z2") * P("z1-z2") == P("z1^2-z2^2"));
    CHECK((P("z1^3*z2-7") * BivariatePoly()).is_zero());
}

TEST_CASE("exact evaluation") {
    // direct exact arithmetic: (1/2)(1/2) - 1 = -3/4
    GaussianRational half(mpq_class(1, 2));
    CHECK(P("z1*z2-1").eval(half, half) == GaussianRational(mpq_class(-3, 4)));
}

TEST_CASE("floating evaluation carries an error bound") {
    auto r = P("z1^2*z2 - z2 + 1").eval(std::complex<double>(0.3, 0.1), std::complex<double>(-0.2, 0.0));
    std::complex<double> z1(0.3, 0.1), z2(-0.2, 0.0);
    std::complex<double> expect = z1 * z1 * z2 - z2 + 1.0;
    CHECK(std::abs(r.value - expect) <= 1e-14);
    CHECK(r.error_bound > 0.0);
    CHECK(r.error_bound < 1e-12);
}

TEST_CASE("power: negative exponent is a domain error") {
    CHECK_THROWS_AS(P("z1+1").pow(-2), DomainError);
    CHECK(P("z1+z2").pow(0) == P("1"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 200; ++rep) {
        auto a = testutil::random_poly(rng);
        auto b = testutil::random_poly(rng);
        auto c = testutil::random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("parser: grammar basics and round trip") {
    CHECK(P("(1/2+1/3*i)*z1^2*z2 - z2 + 1") ==
          BivariatePoly::monomial(Exp2{2, 1}, GaussianRational(mpq_class(1, 2), mpq_class(1, 3))) +
              BivariatePoly::monomial(Exp2{0, 1}, GaussianRational(-1)) + BivariatePoly(1));
    CHECK(P(" z1 * z2 - 1 ") == P("z1*z2-1"));
    CHECK(P("0.5*z1") == P("(1/2)*z1"));
    CHECK(P("2*z1*z2+z1+z2+2") == P("z1+2*z1*z2+2+z2"));

    std::mt19937 rng(777);
    for (int rep = 0; rep < 100; ++rep) {
        auto p = testutil::random_poly(rng);
        CHECK(parse_poly(p.str()) == p);
    }
}

TEST_CASE("parser: errors carry positions") {
    CHECK_THROWS_AS(parse_poly("z1 +"), ParseError);
    CHECK_THROWS_AS(parse_poly("z3"), ParseError);
    CHECK_THROWS_AS(parse_poly("z1^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("z1/(z2)"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    try {
        parse_poly("z1 +\n @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column >= 2);
    }
}

TEST_CASE("ideal text parsing") {
    auto gens = parse_ideal_text("z1 - 1/2; z2*(z1-1/2)");
    CHECK(gens.size() == 2);
    CHECK(gens[0] == P("z1-1/2"));
}

TEST_CASE("gcd: spec examples") {
    CHECK(gcd(P("(z1*z2-1)*(z1+z2-2)"), P("z1*z2-1")) == P("z1*z2-1"));
    CHECK(gcd(P("z1"), P("z2")) == P("1"));
    // trial-division oracle: candidate divides both inputs exactly
    auto g = gcd(P("z1^2-z2^2"), P("z1-z2"));
    CHECK(g == P("z1-z2"));
    CHECK(divides(g, P("z1^2-z2^2")));
    CHECK(divides(g, P("z1-z2")));
    CHECK_THROWS_AS(gcd(BivariatePoly(), BivariatePoly()), DomainError);
}

TEST_CASE("gcd divides both inputs on random products") {
    std::mt19937 rng(999);
    int done = 0;
    while (done < 100) {
        auto f = testutil::random_nonzero_poly(rng, 2, 3);
        auto a = testutil::random_nonzero_poly(rng, 2, 3);
        auto b = testutil::random_nonzero_poly(rng, 2, 3);
        auto p = f * a;
        auto q = f * b;
        auto g = gcd(p, q);
        CHECK(divides(g, p));
        CHECK(divides(g, q));
        CHECK(divides(f.monic(), g * BivariatePoly(1)));  // f | gcd since f | both
        ++done;
    }
}

TEST_CASE("resultant: spec examples and 2x2 Sylvester oracle") {
    // oracle: both inputs degree 1 in z2: det [[a1, a0],[b1, b0]]
    auto a = P("z1*z2-1");
    auto b = P("z2+z1-2");
    auto ac = a.coeffs_in(Var::z2);
    auto bc = b.coeffs_in(Var::z2);
    auto det = ac[1] * bc[0] - ac[0] * bc[1];
    auto r = resultant(a, b, Var::z2);
    CHECK(r == det.monic());
    CHECK(r == P("(z1-1)^2"));

    CHECK(resultant(P("z2"), P("z2-1"), Var::z2) == P("1"));
    auto p = P("z1*z2^2 - z2 + 3");
    CHECK(resultant(p, p, Var::z2).is_zero());
    CHECK_THROWS_AS(resultant(BivariatePoly(), P("z1"), Var::z2), DomainError);
}

TEST_CASE("resultant specializes correctly (numeric property)") {
    std::mt19937 rng(4242);
    int checked = 0;
    while (checked < 30) {
        auto a = testutil::random_nonzero_poly(rng, 3, 4);
        auto b = testutil::random_nonzero_poly(rng, 3, 4);
        if (a.degree_in(Var::z2) < 1 || b.degree_in(Var::z2) < 1) continue;
        auto r = resultant(a, b, Var::z2);
        if (r.is_zero() || r.is_constant()) continue;
        // the normalized resultant is proportional to the specialized one:
        // compare ratios across two sample points
        auto sample = [&](std::complex<double> z1) -> std::optional<std::complex<double>> {
            auto alc = a.coeffs_in(Var::z2).back();
            auto blc = b.coeffs_in(Var::z2).back();
            // degree must not drop at the sample or the formula changes
            if (std::abs(alc.eval_value(z1, 0.0)) < 0.1 || std::abs(blc.eval_value(z1, 0.0)) < 0.1)
                return std::nullopt;
            auto ua = specialize(a, Var::z1, z1);
            auto ub = specialize(b, Var::z1, z1);
            if (ua.degree() != a.degree_in(Var::z2) || ub.degree() != b.degree_in(Var::z2)) return std::nullopt;
            RootOptions opt;
            std::vector<std::complex<double>> ra, rb;
            try {
                ra = roots_raw(ua, opt);
                rb = roots_raw(ub, opt);
            } catch (const bidisc::NonConvergence&) {
                return std::nullopt;
            }
            std::complex<double> prod = std::pow(ua.coeffs.back(), static_cast<double>(ub.degree())) *
                                        std::pow(ub.coeffs.back(), static_cast<double>(ua.degree()));
            for (auto x : ra)
                for (auto y : rb) prod *= (x - y);
            return prod;
        };
        std::complex<double> za = 0.7 * testutil::random_unit(rng);
        std::complex<double> zb = 1.3 * testutil::random_unit(rng);
        auto pa = sample(za), pb = sample(zb);
        if (!pa || !pb) continue;
        std::complex<double> da = r.eval_value(za, 0.0), db = r.eval_value(zb, 0.0);
        if (std::abs(*pa) < 1e-6 || std::abs(da) < 1e-6) continue;
        std::complex<double> lhs = db * (*pa), rhs = da * (*pb);
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        CHECK(std::abs(lhs - rhs) <= 1e-8 * scale);
        ++checked;
    }
}

TEST_CASE("squarefree factorization: spec examples") {
    auto fs = squarefree_factor(P("(z1-z2)^2*(z1*z2-1)"));
    REQUIRE(fs.size() == 2);
    // sorted by degree then grlex
    CHECK(fs[0].first == P("z1-z2"));
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == P("z1*z2-1"));
    CHECK(fs[1].second == 1);

    auto single = squarefree_factor(P("z1"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == P("z1"));
    CHECK(single[0].second == 1);

    CHECK(squarefree_factor(P("5")).empty());
    CHECK_THROWS_AS(squarefree_factor(BivariatePoly()), DomainError);
}

TEST_CASE("squarefree factorization reassembles the input") {
    std::mt19937 rng(31337);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = testutil::random_nonzero_poly(rng, 2, 3);
        auto b = testutil::random_nonzero_poly(rng, 2, 3);
        auto p = a * a * b;
        if (p.is_constant()) continue;
        auto fs = squarefree_factor(p);
        BivariatePoly prod(1);
        for (const auto& [f, mult] : fs) {
            prod *= f.pow(mult);
            CHECK(gcd(f, f.derivative(f.degree_in(Var::z1) > 0 ? Var::z1 : Var::z2)).is_constant());
        }
        // product equals input up to a unit
        auto q = divide_exact(p, prod);
        REQUIRE(q.has_value());
        CHECK(q->is_constant());
        // factors pairwise coprime
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK(gcd(fs[i].first, fs[j].first).is_constant());
    }
}

TEST_CASE("univariate slice trims leading noise") {
    UnivariateSlice u({{1.0, 0.0}, {2.0, 0.0}, {1e-16, 0.0}}, "direct");
    CHECK(u.degree() == 1);
}

TEST_CASE("roots: known values") {
    UnivariateSlice u({{1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}, "direct");  // z^2 + 1
    auto rs = roots_univariate(u);
    REQUIRE(rs.size() == 2);
    CHECK(std::abs(rs[0].value - std::complex<double>(0, -1)) < 1e-10);
    CHECK(std::abs(rs[1].value - std::complex<double>(0, 1)) < 1e-10);

    UnivariateSlice lin({{-2.0, -1.0}, {1.0, 0.0}}, "direct");  // z - (2+i)
    auto lr = roots_univariate(lin);
    REQUIRE(lr.size() == 1);
    CHECK(std::abs(lr[0].value - std::complex<double>(2, 1)) < 1e-12);
}

TEST_CASE("roots: clustered triple root") {
    // (z - 1/2)^3 = z^3 - 3/2 z^2 + 3/4 z - 1/8
    UnivariateSlice u({{-0.125, 0.0}, {0.75, 0.0}, {-1.5, 0.0}, {1.0, 0.0}}, "direct");
    auto rs = roots_univariate(u);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].multiplicity == 3);
    CHECK(std::abs(rs[0].value - 0.5) < 1e-5);
}

TEST_CASE("roots: residual bound and multiplicity count on random polys") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int rep = 0; rep < 50; ++rep) {
        int n = deg(rng);
        std::vector<std::complex<double>> cs(static_cast<std::size_t>(n) + 1);
        for (auto& c : cs) c = {coeff(rng), coeff(rng)};
        if (std::abs(cs.back()) < 0.1) cs.back() = 1.0;
        UnivariateSlice u(cs, "direct");
        auto rs = roots_univariate(u);
        int count = 0;
        double scale = 1.0 + u.coeff_scale();
        for (const auto& r : rs) {
            count += r.multiplicity;
            CHECK(r.residual <= 1e-9 * scale);
        }
        CHECK(count == u.degree());
    }
}

TEST_CASE("specialize extracts the right slice") {
    auto p = P("z1^2*z2 - z2 + 1");
    auto u = specialize(p, Var::z2, std::complex<double>(0.5, 0.0));
    // in z1: 0.5 z1^2 + 0.5 -> degree 2
    CHECK(u.degree() == 2);
    CHECK(std::abs(u.eval(std::complex<double>(1.0, 0.0)) - p.eval_value({1.0, 0.0}, {0.5, 0.0})) < 1e-14);
}
