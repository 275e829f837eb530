#include "gup/compacttheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gup/errors.hpp"

namespace gup {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPiHbar = 2.0 * kPi * kHbar;

void check_mode_index(int n) {
    if (n < 1 || n > 1000000) throw DomainError("localization mode index must be >= 1");
}

double mode_phase(const TruncatedSpace& space, double p, int n) {
    // n pi (z + q0) / (2 q0)
    return 0.5 * n * kPi * (space.algebra.z(p) / space.q0() + 1.0);
}

} // namespace

MomentumState max_loc_state(const TruncatedSpace& space, double xi, int n,
                            const QuadratureSpec& spec) {
    check_mode_index(n);
    if (!std::isfinite(xi)) throw DomainError("max_loc_state: xi must be finite");

    const TruncatedSpace sp = space;
    const double c = 1.0 / std::sqrt(sp.q0());
    const double mu = 0.5 * n * kPi / sp.q0();

    auto amp = [sp, c, xi, n](double p) -> std::complex<double> {
        if (std::fabs(p) >= sp.p0()) return {0.0, 0.0};
        const double shape = c * std::sin(mode_phase(sp, p, n));
        return shape * std::polar(1.0, -xi * sp.algebra.z(p) / kHbar);
    };
    auto damp = [sp, c, mu, xi, n](double p) -> std::complex<double> {
        if (std::fabs(p) >= sp.p0()) {
            // One-sided limit of the derivative: the shape's slope survives.
            const double slope = c * mu * std::cos(mode_phase(sp, std::copysign(sp.p0(), p), n));
            return (slope / sp.algebra.f(p)) *
                   std::polar(1.0, -xi * sp.algebra.z(p) / kHbar);
        }
        const double ph = mode_phase(sp, p, n);
        const std::complex<double> trans = std::polar(1.0, -xi * sp.algebra.z(p) / kHbar);
        const std::complex<double> inner(c * mu * std::cos(ph), 0.0);
        const std::complex<double> phase_part =
            std::complex<double>(0.0, -xi / kHbar) * (c * std::sin(ph));
        return trans * (inner + phase_part) / sp.algebra.f(p);
    };
    return MomentumState(sp.algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                         StateSupport::interval(sp.p0()), spec);
}

MomentumState truncated_mode_superposition(const TruncatedSpace& space,
                                           std::span<const std::complex<double>> coeffs,
                                           const QuadratureSpec& spec) {
    if (coeffs.empty()) throw DomainError("truncated_mode_superposition: no coefficients");
    const TruncatedSpace sp = space;
    std::vector<std::complex<double>> cs(coeffs.begin(), coeffs.end());
    const double c = 1.0 / std::sqrt(sp.q0());

    auto amp = [sp, cs, c](double p) -> std::complex<double> {
        if (std::fabs(p) >= sp.p0()) return {0.0, 0.0};
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < cs.size(); ++k) {
            acc += cs[k] * std::sin(mode_phase(sp, p, static_cast<int>(k) + 1));
        }
        return c * acc;
    };
    auto damp = [sp, cs, c](double p) -> std::complex<double> {
        const double pc = std::clamp(p, -sp.p0(), sp.p0());
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const int n = static_cast<int>(k) + 1;
            const double mu = 0.5 * n * kPi / sp.q0();
            acc += cs[k] * mu * std::cos(mode_phase(sp, pc, n));
        }
        return c * acc / sp.algebra.f(p);
    };
    return MomentumState(sp.algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                         StateSupport::interval(sp.p0()), spec);
}

double delta_x_min(const TruncatedSpace& space, int n) {
    check_mode_index(n);
    return 0.5 * n * kPi * kHbar / space.q0();
}

SeriesBounds series_bounds(const TruncatedSpace& space) {
    const double beta = space.algebra.beta();
    if (space.algebra.kind() != AlgebraKind::SqrtGUP) {
        throw DomainError("series_bounds: defined for the sqrt-deformed algebra");
    }
    const double expected_p0 = 1.0 / std::sqrt(2.0 * beta);
    if (std::fabs(space.p0() - expected_p0) > 1e-9 * expected_p0) {
        throw DomainError("series_bounds: requires the special cut-off p0 = 1/sqrt(2 beta)");
    }
    SeriesBounds out;
    out.lower_bound = 0.5 * std::sqrt(2.5) * kHbar * std::sqrt(beta);
    out.delta_x_min = delta_x_min(space, 1);
    out.ratio = out.delta_x_min / out.lower_bound;
    return out;
}

std::complex<double> maxloc_overlap(const TruncatedSpace& space, double xi, double xi_prime) {
    if (!std::isfinite(xi) || !std::isfinite(xi_prime)) {
        throw DomainError("maxloc_overlap: positions must be finite");
    }
    const double w = (xi - xi_prime) * space.q0() / kHbar;
    const double aw = std::fabs(w);
    double value;
    if (aw < 1e-6) {
        value = 1.0 + w * w * (1.0 / (kPi * kPi) - 1.0 / 6.0);
    } else if (std::fabs(aw - kPi) < 1e-6) {
        const double v = aw - kPi; // sin(w)/(pi - |w|) -> sinc(v)
        const double sinc = (v == 0.0) ? 1.0 : std::sin(v) / v;
        value = kPi * kPi * sinc / (aw * (2.0 * kPi + v));
    } else {
        value = kPi * kPi * std::sin(aw) / (aw * (kPi - aw) * (kPi + aw));
    }
    return {value, 0.0};
}

std::complex<double> quasi_position_transform_point(
    const TruncatedSpace& space, const std::function<std::complex<double>(double)>& amplitude,
    double xi, const QuadratureSpec& spec) {
    const double q0 = space.q0();
    const double k = 1.0 / std::sqrt(q0);
    QuadratureSpec qs = spec;
    qs.oscillation_hint = std::fabs(xi) / kHbar;
    const auto integrand = [&](double p) -> std::complex<double> {
        const std::complex<double> a = amplitude(p);
        if (a == std::complex<double>(0.0, 0.0)) return a;
        const double z = space.algebra.z(p);
        return a * space.algebra.measure_weight(p) * (k * std::cos(0.5 * kPi * z / q0)) *
               std::polar(1.0, xi * z / kHbar);
    };
    return integrate_finite(std::function<std::complex<double>(double)>(integrand), -space.p0(),
                            space.p0(), qs)
        .value;
}

namespace {

void check_physical_input(const MomentumState& state) {
    if (!state.support().compact) {
        throw DomainError("quasi-position transform: state must have compact support");
    }
    const double p0 = state.support().p0;
    double scale = 0.0;
    for (const double frac : {0.0, 0.35, 0.7, 0.95}) {
        scale = std::max({scale, std::abs(state.amplitude(frac * p0)),
                          std::abs(state.amplitude(-frac * p0))});
    }
    const double edge =
        std::max(std::abs(state.amplitude(p0)), std::abs(state.amplitude(-p0)));
    if (edge > 1e-8 * std::max(scale, 1e-300)) {
        throw DomainError(
            "quasi-position transform: amplitude must vanish at the momentum cut-off");
    }
}

} // namespace

QuasiPositionSamples gft_truncated(const MomentumState& state, std::span<const double> xi_grid,
                                   const QuadratureSpec& spec) {
    check_physical_input(state);
    const TruncatedSpace space(state.algebra(), state.support().p0);
    QuasiPositionSamples out;
    out.xi.assign(xi_grid.begin(), xi_grid.end());
    out.psi.resize(xi_grid.size());
    for (std::size_t i = 0; i < xi_grid.size(); ++i) {
        out.psi[i] = quasi_position_transform_point(
            space, [&state](double p) { return state.amplitude(p); }, xi_grid[i], spec);
    }
    return out;
}

std::complex<double> quasi_wavefunction_derivative(const MomentumState& state, double xi,
                                                   int order, const QuadratureSpec& spec) {
    if (order < 0 || order > 128) {
        throw DomainError("quasi_wavefunction_derivative: order out of range");
    }
    check_physical_input(state);
    const TruncatedSpace space(state.algebra(), state.support().p0);
    return quasi_position_transform_point(
        space,
        [&state, order](double p) {
            const std::complex<double> iq(0.0, state.algebra().z(p) / kHbar);
            std::complex<double> fac{1.0, 0.0};
            for (int k = 0; k < order; ++k) fac *= iq;
            return fac * state.amplitude(p);
        },
        xi, spec);
}

std::complex<double> quasi_plane_wave(const TruncatedSpace& space, double p_tilde, double xi) {
    if (std::fabs(p_tilde) > space.p0()) {
        throw DomainError("quasi_plane_wave: momentum outside the truncated interval");
    }
    const double z = space.algebra.z(p_tilde);
    const double q0 = space.q0();
    return std::polar(std::cos(0.5 * kPi * z / q0) / std::sqrt(q0), xi * z / kHbar);
}

namespace {

std::vector<std::complex<double>> inverse_common(
    std::span<const double> q_grid, const TruncatedSpace& space, double interior_margin,
    const std::function<std::complex<double>(double)>& fourier_at_q) {
    const double q0 = space.q0();
    if (!(interior_margin > 0.0)) {
        throw DomainError("gft_truncated_inverse: interior_margin must be positive");
    }
    std::vector<std::complex<double>> out(q_grid.size());
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        const double q = q_grid[i];
        if (std::fabs(q) > q0 * (1.0 - interior_margin)) {
            throw SingularityError(
                "gft_truncated_inverse: query too close to the interval edge "
                "(cos factor singular)",
                q0 * (1.0 - interior_margin), q0);
        }
        const double weight = std::sqrt(q0) / (kTwoPiHbar * std::cos(0.5 * kPi * q / q0));
        out[i] = weight * fourier_at_q(q);
    }
    return out;
}

} // namespace

TruncatedInverseResult gft_truncated_inverse(
    const std::function<std::complex<double>(double)>& psi_xi, std::span<const double> q_grid,
    double xi_limit, const TruncatedSpace& space, const QuadratureSpec& spec,
    double interior_margin) {
    if (!(xi_limit > 0.0) || !std::isfinite(xi_limit)) {
        throw DomainError("gft_truncated_inverse: xi_limit must be positive and finite");
    }
    TruncatedInverseResult out;
    // The quasi-position profiles decay only algebraically; report the edge
    // magnitude scale as the window-truncation estimate.
    out.tail_estimate =
        (std::abs(psi_xi(xi_limit)) + std::abs(psi_xi(-xi_limit))) * xi_limit / 2.0;
    out.psi_q = inverse_common(q_grid, space, interior_margin, [&](double q) {
        QuadratureSpec qs = spec;
        qs.oscillation_hint = (std::fabs(q) + space.q0()) / kHbar;
        const auto integrand = [&](double x) -> std::complex<double> {
            const std::complex<double> v = psi_xi(x);
            if (v == std::complex<double>(0.0, 0.0)) return v;
            return v * std::polar(1.0, -x * q / kHbar);
        };
        return integrate_finite(std::function<std::complex<double>(double)>(integrand),
                                -xi_limit, xi_limit, qs)
            .value;
    });
    return out;
}

TruncatedInverseResult gft_truncated_inverse(const QuasiPositionSamples& samples,
                                             std::span<const double> q_grid,
                                             const TruncatedSpace& space,
                                             double interior_margin) {
    if (samples.xi.size() != samples.psi.size() || samples.xi.size() < 5) {
        throw UnsupportedGridError("gft_truncated_inverse: bad sample arrays");
    }
    const double h = samples.xi[1] - samples.xi[0];
    for (std::size_t i = 1; i + 1 < samples.xi.size(); ++i) {
        if (std::fabs((samples.xi[i + 1] - samples.xi[i]) - h) > 1e-9 * std::fabs(h)) {
            throw UnsupportedGridError("gft_truncated_inverse: grid must be uniform");
        }
    }
    TruncatedInverseResult out;
    out.tail_estimate =
        (std::abs(samples.psi.front()) + std::abs(samples.psi.back())) *
        std::fabs(samples.xi.back()) / 2.0;
    std::vector<std::complex<double>> work(samples.xi.size());
    out.psi_q = inverse_common(q_grid, space, interior_margin, [&](double q) {
        for (std::size_t j = 0; j < samples.xi.size(); ++j) {
            work[j] = samples.psi[j] * std::polar(1.0, -samples.xi[j] * q / kHbar);
        }
        return simpson_uniform(work.data(), work.size(), h);
    });
    return out;
}

} // namespace gup
