#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

/// A univariate complex-double polynomial obtained by specializing one
/// variable of a BivariatePoly (or given directly). Leading near-zero
/// coefficients are trimmed at 1e-13 relative tolerance.
struct UnivariateSlice {
    std::vector<std::complex<double>> coeffs;  // coeffs[k] multiplies x^k
    std::string provenance;                    // e.g. "z2 = 0.5+0i" or "direct"

    explicit UnivariateSlice(std::vector<std::complex<double>> c, std::string prov = "direct");

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::complex<double> eval(std::complex<double> x) const;
    std::complex<double> eval_derivative(std::complex<double> x) const;
    double coeff_scale() const;
};

/// Specialize `fixed` to `value`; the slice is univariate in the other variable.
UnivariateSlice specialize(const BivariatePoly& p, Var fixed, std::complex<double> value);

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
    double residual = 0.0;  // |u(value)|
};

struct RootOptions {
    int max_iterations = 200;
    double step_tolerance = 1e-13;     // converged when step < tol*(1+|root|)
    double cluster_radius = 1e-6;      // base radius, scaled by (1+|root|)
    double residual_accept = 1e-9;     // fallback acceptance, scaled by (1+max|coeff|)
};

/// All roots with multiplicity via Aberth-Ehrlich simultaneous iteration,
/// then single-linkage clustering with the adaptive radius
/// max(cluster_radius*(1+|z|), 20*|u(z)/u'(z)|) so that numerically
/// multiple roots collapse into one cluster. Throws NonConvergence with the
/// best iterates if neither the step criterion nor the residual fallback is met.
std::vector<Root> roots_univariate(const UnivariateSlice& u, const RootOptions& opt = {});

/// Raw simultaneous iteration without clustering (one entry per degree).
std::vector<std::complex<double>> roots_raw(const UnivariateSlice& u, const RootOptions& opt = {});

} // namespace bidisc
