#include "gup/momentum_state.hpp"

#include <cmath>

#include "gup/errors.hpp"

namespace gup {

namespace {
constexpr double kStencilStep = 1e-4; // step in the flattening coordinate
}

MomentumState::MomentumState(DeformedAlgebra algebra, Amplitude amplitude,
                             std::optional<Amplitude> derivative, StateSupport support,
                             QuadratureSpec quadrature)
    : algebra_(algebra),
      raw_amplitude_(std::move(amplitude)),
      raw_derivative_(derivative ? std::move(*derivative) : Amplitude{}),
      support_(support),
      quad_(quadrature) {
    if (!raw_amplitude_) throw InvalidStateError("MomentumState: empty amplitude");
    if (support_.compact && !(support_.p0 > 0.0)) {
        throw InvalidStateError("MomentumState: compact support needs p0 > 0");
    }

    const auto density = [this](double p) {
        const auto v = raw_amplitude_(p);
        return std::norm(v) * algebra_.measure_weight(p);
    };
    double n2 = 0.0;
    try {
        if (support_.compact) {
            n2 = integrate_finite(std::function<double(double)>(density), -support_.p0,
                                  support_.p0, quad_)
                     .value;
        } else {
            n2 = integrate_real_line(std::function<double(double)>(density), quad_).value;
        }
    } catch (const ConvergenceError& e) {
        throw InvalidStateError(std::string("MomentumState: norm integral did not converge: ") +
                                e.what());
    }
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw InvalidStateError("MomentumState: amplitude is not normalizable");
    }
    scale_ = 1.0 / std::sqrt(n2);
}

std::complex<double> MomentumState::amplitude(double p) const {
    return scale_ * raw_amplitude_(p);
}

std::complex<double> MomentumState::derivative(double p) const {
    if (raw_derivative_) return scale_ * raw_derivative_(p);
    // Five-point stencil in q = z(p); d/dp = (1/f) d/dq.
    const double q = algebra_.z(p);
    double h = kStencilStep;
    if (support_.compact) {
        const double q0 = algebra_.z(support_.p0);
        const double room = std::min(q0 - q, q0 + q) / 4.0;
        if (room <= 0.0) return {0.0, 0.0}; // endpoint of the physical interval
        h = std::min(h, room);
        if (h < 1e-10) h = 1e-10;
    }
    const auto g = [this](double qq) { return raw_amplitude_(algebra_.z_inverse(qq)); };
    const std::complex<double> d =
        (-g(q + 2 * h) + 8.0 * g(q + h) - 8.0 * g(q - h) + g(q - 2 * h)) / (12.0 * h);
    return scale_ * d * algebra_.measure_weight(p);
}

double MomentumState::norm() const {
    const auto density = [this](double p) {
        return std::norm(amplitude(p)) * algebra_.measure_weight(p);
    };
    if (support_.compact) {
        return integrate_finite(std::function<double(double)>(density), -support_.p0, support_.p0,
                                quad_)
            .value;
    }
    return integrate_real_line(std::function<double(double)>(density), quad_).value;
}

double MomentumState::density_moment(const std::function<double(double)>& w) const {
    const auto integrand = [this, &w](double p) {
        const double d = std::norm(amplitude(p)) * algebra_.measure_weight(p);
        return d == 0.0 ? 0.0 : w(p) * d;
    };
    if (support_.compact) {
        return integrate_finite(std::function<double(double)>(integrand), -support_.p0,
                                support_.p0, quad_)
            .value;
    }
    return integrate_real_line(std::function<double(double)>(integrand), quad_).value;
}

std::complex<double> MomentumState::raw_integral(
    const std::function<std::complex<double>(double)>& g) const {
    if (support_.compact) {
        return integrate_finite(g, -support_.p0, support_.p0, quad_).value;
    }
    return integrate_real_line(g, quad_).value;
}

MomentumMoments momentum_moments(const MomentumState& state) {
    MomentumMoments m;
    m.mean_p = state.density_moment([](double p) { return p; });
    m.mean_p2 = state.density_moment([](double p) { return p * p; });
    m.mean_f = state.density_moment([&state](double p) { return state.algebra().f(p); });
    return m;
}

} // namespace gup
