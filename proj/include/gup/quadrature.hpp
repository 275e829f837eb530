#pragma once

#include <complex>
#include <functional>
#include <optional>

namespace gup {

/// Tolerances and hints for the adaptive integrators.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 60; ///< bisection depth per initial panel

    /// Dominant angular frequency of the integrand in its own variable.
    /// When set, initial panels are chosen no wider than pi/omega so the
    /// first error estimates already resolve the oscillation.
    std::optional<double> oscillation_hint;
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    long long evaluations = 0;
};

struct ComplexQuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
    long long evaluations = 0;
};

/// Adaptive Gauss-Kronrod 7-15 integration of g over the finite interval
/// [a, b]. Panels are bisected depth-first in a fixed order until the
/// embedded-pair error estimate meets the tolerance budget; endpoint values
/// are never evaluated, so integrable endpoint singularities are tolerated.
/// Throws ConvergenceError (carrying the best estimate and its bound) when
/// the budget cannot be met within max_depth.
QuadratureResult integrate_finite(const std::function<double(double)>& g, double a, double b,
                                  const QuadratureSpec& spec = {});

/// Complex-valued version. Real and imaginary parts share the panel
/// subdivision; the error criterion is the worse of the two components.
ComplexQuadratureResult integrate_finite(const std::function<std::complex<double>(double)>& g,
                                         double a, double b, const QuadratureSpec& spec = {});

/// Integral of g over the whole real line via the compactifying map
/// x = 1/t - 1, which folds both tails into t in (0, 1]:
///
///   integral_R g(x) dx = integral_0^1 [ g(1/t - 1) + g(-1/t + 1) ] / t^2 dt
///
/// The mapped endpoint t = 0 is never evaluated. oscillation_hint is the
/// frequency in x; panels near t -> 0 are pre-split accordingly.
QuadratureResult integrate_real_line(const std::function<double(double)>& g,
                                     const QuadratureSpec& spec = {});

ComplexQuadratureResult integrate_real_line(const std::function<std::complex<double>(double)>& g,
                                            const QuadratureSpec& spec = {});

/// Composite Simpson rule over uniformly spaced samples (any count >= 3;
/// an even interval count is handled with a 3/8 tail). Used for
/// sample-based transforms where adaptivity is not possible.
double simpson_uniform(const double* y, std::size_t n, double h);
std::complex<double> simpson_uniform(const std::complex<double>* y, std::size_t n, double h);

} // namespace gup
