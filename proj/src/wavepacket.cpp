#include "gup/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gup/compacttheory.hpp"
#include "gup/errors.hpp"
#include "gup/rootfind.hpp"

namespace gup {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPiHbar = 2.0 * kPi * kHbar;

DeformedAlgebra algebra_for(const WavePacketSpec& spec) {
    switch (spec.framework) {
        case Framework::StandardQM: return DeformedAlgebra::standard();
        case Framework::FullGUP:
        case Framework::CompactGUP: return DeformedAlgebra::sqrt_gup(spec.beta);
    }
    return DeformedAlgebra::standard();
}

// Gaussian exponent scale: (p - c)^2 * gauss_scale / (2 sigma_p).
double gauss_scale(const WavePacketSpec& spec) {
    return spec.framework == Framework::StandardQM ? 1.0 : spec.beta;
}

MomentumState make_state(const WavePacketSpec& spec, double center,
                         const QuadratureSpec& quad) {
    const DeformedAlgebra algebra = algebra_for(spec);
    const double s = gauss_scale(spec) / (2.0 * spec.sigma_p);
    const double sigma_p = spec.sigma_p;
    const double gs = gauss_scale(spec);

    if (spec.framework == Framework::CompactGUP) {
        const TruncatedSpace space(algebra, spec.p0);
        const double q0 = space.q0();
        const double p0 = spec.p0;
        auto amp = [algebra, s, center, q0, p0](double p) -> std::complex<double> {
            if (std::fabs(p) >= p0) return {0.0, 0.0};
            const double theta = 0.5 * kPi * algebra.z(p) / q0;
            const double c = std::cos(theta);
            return {std::exp(-s * (p - center) * (p - center)) * c * c, 0.0};
        };
        auto damp = [algebra, s, center, q0, p0, sigma_p, gs](double p) -> std::complex<double> {
            const double pc = std::clamp(p, -p0, p0);
            const double theta = 0.5 * kPi * algebra.z(pc) / q0;
            const double c = std::cos(theta);
            const double g = std::exp(-s * (pc - center) * (pc - center));
            const double fp = algebra.f(pc);
            const double dgauss = -gs * (pc - center) / sigma_p;
            const double dwin = -std::sin(2.0 * theta) * 0.5 * kPi / (fp * q0);
            return {g * (dgauss * c * c + dwin), 0.0};
        };
        return MomentumState(algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                             StateSupport::interval(p0), quad);
    }

    auto amp = [s, center](double p) -> std::complex<double> {
        return {std::exp(-s * (p - center) * (p - center)), 0.0};
    };
    auto damp = [s, center, sigma_p, gs](double p) -> std::complex<double> {
        const double g = std::exp(-s * (p - center) * (p - center));
        return {-gs * (p - center) / sigma_p * g, 0.0};
    };
    return MomentumState(algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                         StateSupport::full_line(), quad);
}

} // namespace

std::string to_string(Framework fw) {
    switch (fw) {
        case Framework::StandardQM: return "standard";
        case Framework::FullGUP: return "full-gup";
        case Framework::CompactGUP: return "compact-gup";
    }
    return "unknown";
}

WavePacket build_packet(const WavePacketSpec& spec, const QuadratureSpec& quad) {
    if (!(spec.sigma_p > 0.0) || !(spec.mass > 0.0)) {
        throw DomainError("build_packet: sigma_p and mass must be positive");
    }
    if (spec.framework != Framework::StandardQM && !(spec.beta > 0.0)) {
        throw DomainError("build_packet: beta must be positive");
    }
    if (spec.framework == Framework::CompactGUP) {
        if (!(spec.p0 > 0.0)) throw DomainError("build_packet: p0 must be positive");
        if (!(std::fabs(spec.target_mean_p) < spec.p0)) {
            throw CalibrationError(
                "build_packet: target mean momentum must lie inside (-p0, p0)");
        }
    }

    // The Standard measure is flat, so the Gaussian center is the mean.
    if (spec.framework == Framework::StandardQM || spec.target_mean_p == 0.0) {
        return WavePacket{spec, spec.target_mean_p, make_state(spec, spec.target_mean_p, quad)};
    }

    const auto mean_of = [&](double center) {
        const MomentumState st = make_state(spec, center, quad);
        return st.density_moment([](double p) { return p; });
    };
    const auto g = [&](double center) { return mean_of(center) - spec.target_mean_p; };

    // The deformed measure weight decays with |p|, pulling the mean toward
    // zero: the calibrated center sits beyond the target. Expand the upper
    // edge until the target is straddled.
    double lo = spec.target_mean_p;
    double width = std::sqrt(spec.sigma_p / gauss_scale(spec));
    if (spec.framework == Framework::CompactGUP) width = std::min(width, spec.p0);
    double hi = lo;
    double glo = g(lo);
    if (glo > 0.0) {
        // Target already below the mean at the naive center: expand downward.
        double step = width;
        double lo2 = lo - step;
        int it = 0;
        while (g(lo2) > 0.0) {
            step *= 2.0;
            lo2 -= step;
            if (++it > 60) throw CalibrationError("build_packet: cannot bracket the target mean");
        }
        hi = lo;
        lo = lo2;
    } else {
        double step = width;
        hi = lo + step;
        int it = 0;
        while (g(hi) < 0.0) {
            step *= 2.0;
            hi += step;
            if (++it > 60) throw CalibrationError("build_packet: cannot bracket the target mean");
        }
    }
    const double center = find_root(g, lo, hi, 1e-12, 1e-9);
    WavePacket packet{spec, center, make_state(spec, center, quad)};
    const double achieved = packet.state.density_moment([](double p) { return p; });
    if (std::fabs(achieved - spec.target_mean_p) > 1e-8) {
        throw CalibrationError("build_packet: mean-momentum calibration missed the target");
    }
    return packet;
}

std::vector<DensityFrame> evolve_and_project(const WavePacket& packet,
                                             std::span<const double> times,
                                             std::span<const double> x_grid,
                                             const QuadratureSpec& quad) {
    const MomentumState& state = packet.state;
    const DeformedAlgebra& algebra = state.algebra();
    const double mass = packet.spec.mass;
    const double p_scale =
        std::fabs(packet.center) +
        8.0 * std::sqrt(packet.spec.sigma_p / gauss_scale(packet.spec)) +
        (packet.spec.framework == Framework::CompactGUP ? packet.spec.p0 : 0.0);

    if (x_grid.size() < 5) {
        throw UnsupportedGridError("evolve_and_project: need at least 5 grid points");
    }
    const double h = x_grid[1] - x_grid[0];
    if (!(h > 0.0)) throw UnsupportedGridError("evolve_and_project: grid must increase");
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        if (std::fabs(x_grid[i] - x_grid[i - 1] - h) > 1e-9 * std::fabs(h)) {
            throw UnsupportedGridError("evolve_and_project: grid must be uniform");
        }
    }

    std::vector<DensityFrame> frames;
    frames.reserve(times.size());
    for (const double t : times) {
        DensityFrame frame;
        frame.t = t;
        frame.x.assign(x_grid.begin(), x_grid.end());
        frame.abs2.resize(x_grid.size());

        for (std::size_t i = 0; i < x_grid.size(); ++i) {
            const double x = x_grid[i];
            QuadratureSpec qs = quad;
            qs.oscillation_hint =
                std::fabs(x) / kHbar + std::fabs(t) * p_scale / (mass * kHbar);
            std::complex<double> value;
            if (packet.spec.framework == Framework::CompactGUP) {
                const TruncatedSpace space(algebra, packet.spec.p0);
                value = quasi_position_transform_point(
                    space,
                    [&](double p) {
                        return state.amplitude(p) *
                               std::polar(1.0, -t * p * p / (2.0 * mass * kHbar));
                    },
                    x, qs);
            } else {
                const auto integrand = [&](double p) -> std::complex<double> {
                    const std::complex<double> a = state.amplitude(p);
                    if (a == std::complex<double>(0.0, 0.0)) return a;
                    const double phase =
                        x * algebra.z(p) / kHbar - t * p * p / (2.0 * mass * kHbar);
                    return a * algebra.measure_weight(p) * std::polar(1.0, phase);
                };
                value = integrate_real_line(
                            std::function<std::complex<double>(double)>(integrand), qs)
                            .value /
                        std::sqrt(kTwoPiHbar);
            }
            frame.abs2[i] = std::norm(value);
        }
        frame.grid_norm = simpson_uniform(frame.abs2.data(), frame.abs2.size(), h);
        frames.push_back(std::move(frame));
    }
    return frames;
}

SpreadingReport spreading_report(const WavePacket& packet, std::span<const double> times) {
    const MomentumState& state = packet.state;
    const DeformedAlgebra& algebra = state.algebra();
    const double mass = packet.spec.mass;

    const double mean_p = state.density_moment([](double p) { return p; });
    const double mean_fp = state.density_moment([&](double p) { return algebra.f(p) * p; });
    const double mean_f2p2 = state.density_moment([&](double p) {
        const double fp = algebra.f(p) * p;
        return fp * fp;
    });

    // <x>(0) and <x^dagger x>(0); the packet amplitudes are real, so the
    // covariance term of the exact-in-t variance formula vanishes.
    const std::complex<double> overlap = state.raw_integral([&state](double p) {
        return std::conj(state.amplitude(p)) * state.derivative(p);
    });
    const double exp_x0 = -kHbar * overlap.imag();
    const std::complex<double> xx = state.raw_integral([&state, &algebra](double p) {
        const double d = std::norm(state.derivative(p));
        return std::complex<double>(d == 0.0 ? 0.0 : algebra.f(p) * d, 0.0);
    });
    const double var_x0 = kHbar * kHbar * xx.real() - exp_x0 * exp_x0;
    const double var_v = mean_f2p2 - mean_fp * mean_fp;

    SpreadingReport rep;
    rep.mean_p = mean_p;
    rep.slope = mean_fp / mass;
    rep.delta_x0 = std::sqrt(std::max(var_x0, 0.0));
    rep.t.assign(times.begin(), times.end());
    rep.mean_x.resize(times.size());
    rep.delta_x.resize(times.size());
    rep.delta_x_rel.resize(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        rep.mean_x[i] = exp_x0 + rep.slope * t;
        rep.delta_x[i] = std::sqrt(std::max(var_x0 + var_v * t * t / (mass * mass), 0.0));
        rep.delta_x_rel[i] = rep.delta_x[i] / rep.delta_x0;
    }
    return rep;
}

DispersionTable dispersion(Framework framework, double beta, double mass,
                           std::span<const double> k_grid, std::optional<double> p0) {
    if (!(mass > 0.0)) throw DomainError("dispersion: mass must be positive");
    if (framework != Framework::StandardQM && !(beta > 0.0)) {
        throw DomainError("dispersion: beta must be positive");
    }

    double k_max = std::numeric_limits<double>::infinity();
    if (framework == Framework::CompactGUP) {
        if (!p0 || !(*p0 > 0.0)) {
            throw DomainError("dispersion: CompactGUP needs a positive cut-off p0");
        }
        const DeformedAlgebra algebra = DeformedAlgebra::sqrt_gup(beta);
        k_max = algebra.z(*p0) / kHbar;
    }

    DispersionTable out;
    out.k.assign(k_grid.begin(), k_grid.end());
    out.omega.resize(k_grid.size());
    out.omega_prime.resize(k_grid.size());
    out.omega_second.resize(k_grid.size());
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        const double k = k_grid[i];
        if (std::fabs(k) > k_max) {
            throw DomainError("dispersion: |k| exceeds the truncated band k_max = " +
                              std::to_string(k_max));
        }
        if (framework == Framework::StandardQM) {
            out.omega[i] = kHbar * k * k / (2.0 * mass);
            out.omega_prime[i] = kHbar * k / mass;
            out.omega_second[i] = kHbar / mass;
        } else {
            const double a = std::sqrt(2.0 * beta) * kHbar;
            const double sh = std::sinh(a * k);
            out.omega[i] = sh * sh / (4.0 * mass * kHbar * beta);
            out.omega_prime[i] = a * std::sinh(2.0 * a * k) / (4.0 * mass * kHbar * beta);
            out.omega_second[i] = kHbar * std::cosh(2.0 * a * k) / mass;
        }
    }
    return out;
}

} // namespace gup
