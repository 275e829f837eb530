#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "gup/algebra.hpp"
#include "gup/quadrature.hpp"

namespace gup {

/// Support of a momentum-space wave function: the full real line or the
/// truncated interval [-p0, p0].
struct StateSupport {
    bool compact = false;
    double p0 = 0.0;

    static StateSupport full_line() { return {false, 0.0}; }
    static StateSupport interval(double p0) { return {true, p0}; }
};

/// A wave function over momentum space, square integrable under the
/// deformed measure dp/f(p) of its algebra. The amplitude is normalized at
/// construction; an analytic derivative may be supplied, otherwise a
/// five-point stencil in the flattening coordinate is used.
class MomentumState {
public:
    using Amplitude = std::function<std::complex<double>(double)>;

    MomentumState(DeformedAlgebra algebra, Amplitude amplitude,
                  std::optional<Amplitude> derivative, StateSupport support,
                  QuadratureSpec quadrature = {});

    std::complex<double> amplitude(double p) const;
    std::complex<double> derivative(double p) const;

    const DeformedAlgebra& algebra() const { return algebra_; }
    const StateSupport& support() const { return support_; }
    const QuadratureSpec& quadrature() const { return quad_; }
    bool has_analytic_derivative() const { return static_cast<bool>(raw_derivative_); }

    /// Norm under the deformed measure after normalization (== 1 up to
    /// quadrature error; recomputed on call, useful as a self-check).
    double norm() const;

    /// Integral of w(p) |psi(p)|^2 dp/f(p) over the support.
    double density_moment(const std::function<double(double)>& w) const;

    /// Integral of g(p) dp over the support (no measure weight), with the
    /// integrand supplied as a complex function of momentum.
    std::complex<double> raw_integral(const std::function<std::complex<double>(double)>& g) const;

private:
    DeformedAlgebra algebra_;
    Amplitude raw_amplitude_;
    Amplitude raw_derivative_; // may be empty
    StateSupport support_;
    QuadratureSpec quad_;
    double scale_ = 1.0; // 1/norm of the raw amplitude
};

struct MomentumMoments {
    double mean_p = 0.0;
    double mean_p2 = 0.0;
    double mean_f = 0.0;
};

MomentumMoments momentum_moments(const MomentumState& state);

/// Uncertainty data for a state, plus how much slack it has against the
/// generalized uncertainty bound dx * dp >= (hbar/2) |<f>|.
struct UncertaintyReport {
    double delta_x = 0.0;
    double delta_p = 0.0;
    double exp_f = 0.0;
    double exp_x = 0.0;
    double exp_p = 0.0;
    double gup_slack = 0.0; ///< delta_x * delta_p - (hbar/2) |exp_f|
};

} // namespace gup
