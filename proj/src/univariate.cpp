#include "bidisc/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bidisc/errors.hpp"

namespace bidisc {

UnivariateSlice::UnivariateSlice(std::vector<std::complex<double>> c, std::string prov)
    : coeffs(std::move(c)), provenance(std::move(prov)) {
    double scale = 0.0;
    for (const auto& x : coeffs) scale = std::max(scale, std::abs(x));
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-13 * scale) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0.0);
}

std::complex<double> UnivariateSlice::eval(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UnivariateSlice::eval_derivative(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (int k = degree(); k >= 1; --k) acc = acc * x + coeffs[static_cast<std::size_t>(k)] * static_cast<double>(k);
    return acc;
}

double UnivariateSlice::coeff_scale() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

UnivariateSlice specialize(const BivariatePoly& p, Var fixed, std::complex<double> value) {
    Var free = other(fixed);
    auto cs = p.coeffs_in(free);
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& c : cs) {
        // each c depends only on `fixed`
        coeffs.push_back(fixed == Var::z1 ? c.eval_value(value, 0.0) : c.eval_value(0.0, value));
    }
    std::ostringstream prov;
    prov << (fixed == Var::z1 ? "z1" : "z2") << " = " << value.real();
    if (value.imag() != 0.0) prov << (value.imag() > 0 ? "+" : "") << value.imag() << "i";
    return UnivariateSlice(std::move(coeffs), prov.str());
}

std::vector<std::complex<double>> roots_raw(const UnivariateSlice& u, const RootOptions& opt) {
    const int n = u.degree();
    if (n < 1) throw DomainError("root finding requires degree >= 1");
    const auto& a = u.coeffs;

    // Cauchy-style radius for initial guesses
    double lead = std::abs(a.back());
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(k)]) / lead, 1.0 / (n - k)));
    radius = std::max(0.5, 1.2 * radius);

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = radius * std::polar(1.0, theta);
    }

    std::vector<bool> frozen(static_cast<std::size_t>(n), false);
    bool converged = false;
    for (int iter = 0; iter < opt.max_iterations && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            if (frozen[static_cast<std::size_t>(i)]) continue;
            std::complex<double> p = u.eval(zi);
            std::complex<double> dp = u.eval_derivative(zi);
            std::complex<double> newton = (dp == 0.0) ? std::complex<double>(0.0) : p / dp;
            std::complex<double> sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            std::complex<double> denom = 1.0 - newton * sum;
            std::complex<double> step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            if (dp == 0.0 && p != 0.0) step = std::polar(1e-3, 0.7 + iter);  // nudge off a critical point
            zi -= step;
            double s = std::abs(step);
            if (s < opt.step_tolerance * (1.0 + std::abs(zi)))
                frozen[static_cast<std::size_t>(i)] = true;
            else
                converged = false;
        }
    }

    if (!converged) {
        // Multiple roots stall the step criterion; accept when residuals are
        // already at the noise floor, otherwise report the best iterates.
        double tol = opt.residual_accept * (1.0 + u.coeff_scale());
        for (const auto& zi : z) {
            if (std::abs(u.eval(zi)) > tol)
                throw NonConvergence("simultaneous root iteration did not converge", z);
        }
    }
    return z;
}

std::vector<Root> roots_univariate(const UnivariateSlice& u, const RootOptions& opt) {
    auto z = roots_raw(u, opt);
    const int n = static_cast<int>(z.size());

    // adaptive cluster radius per iterate
    std::vector<double> radius(z.size());
    for (int i = 0; i < n; ++i) {
        auto zi = z[static_cast<std::size_t>(i)];
        double r = opt.cluster_radius * (1.0 + std::abs(zi));
        std::complex<double> dp = u.eval_derivative(zi);
        if (std::abs(dp) > 0.0) r = std::max(r, 20.0 * std::abs(u.eval(zi) / dp));
        radius[static_cast<std::size_t>(i)] = r;
    }

    // single-linkage grouping
    std::vector<int> group(z.size(), -1);
    int ngroups = 0;
    for (int i = 0; i < n; ++i) {
        if (group[static_cast<std::size_t>(i)] >= 0) continue;
        group[static_cast<std::size_t>(i)] = ngroups;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a) {
                if (group[static_cast<std::size_t>(a)] != ngroups) continue;
                for (int b = 0; b < n; ++b) {
                    if (group[static_cast<std::size_t>(b)] >= 0) continue;
                    double d = std::abs(z[static_cast<std::size_t>(a)] - z[static_cast<std::size_t>(b)]);
                    if (d <= radius[static_cast<std::size_t>(a)] + radius[static_cast<std::size_t>(b)]) {
                        group[static_cast<std::size_t>(b)] = ngroups;
                        grew = true;
                    }
                }
            }
        }
        ++ngroups;
    }

    std::vector<Root> roots(static_cast<std::size_t>(ngroups));
    std::vector<int> counts(static_cast<std::size_t>(ngroups), 0);
    std::vector<std::complex<double>> sums(static_cast<std::size_t>(ngroups), 0.0);
    for (int i = 0; i < n; ++i) {
        sums[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += z[static_cast<std::size_t>(i)];
        counts[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])]++;
    }
    for (int g = 0; g < ngroups; ++g) {
        auto center = sums[static_cast<std::size_t>(g)] / static_cast<double>(counts[static_cast<std::size_t>(g)]);
        roots[static_cast<std::size_t>(g)] = Root{center, counts[static_cast<std::size_t>(g)], std::abs(u.eval(center))};
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return roots;
}

} // namespace bidisc
