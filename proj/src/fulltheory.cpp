#include "gup/fulltheory.hpp"

#include <cmath>
#include <numbers>

#include "gup/errors.hpp"

namespace gup {

namespace {

constexpr double kTwoPiHbar = 2.0 * std::numbers::pi * kHbar;

void check_uniform_grid(std::span<const double> x, const char* what) {
    if (x.size() < 5) throw UnsupportedGridError(std::string(what) + ": grid too small");
    const double h = x[1] - x[0];
    if (!(h > 0.0)) throw UnsupportedGridError(std::string(what) + ": grid must be increasing");
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        if (std::fabs((x[i + 1] - x[i]) - h) > 1e-9 * std::fabs(h)) {
            throw UnsupportedGridError(std::string(what) + ": grid must be uniform");
        }
    }
}

} // namespace

std::complex<double> modified_plane_wave(const DeformedAlgebra& algebra, double x, double p) {
    return std::polar(1.0 / std::sqrt(kTwoPiHbar), x * algebra.z(p) / kHbar);
}

PositionSamples gft_full(const MomentumState& state, std::span<const double> x_grid,
                         const QuadratureSpec& spec) {
    if (state.support().compact) {
        throw DomainError("gft_full: state must live on the full momentum line");
    }
    PositionSamples out;
    out.x.assign(x_grid.begin(), x_grid.end());
    out.psi.resize(x_grid.size());
    const DeformedAlgebra& algebra = state.algebra();
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        QuadratureSpec qs = spec;
        qs.oscillation_hint = std::fabs(x) / kHbar;
        const auto integrand = [&](double p) -> std::complex<double> {
            const std::complex<double> a = state.amplitude(p);
            if (a == std::complex<double>(0.0, 0.0)) return a;
            return a * algebra.measure_weight(p) *
                   std::polar(1.0, x * algebra.z(p) / kHbar);
        };
        out.psi[i] =
            integrate_real_line(std::function<std::complex<double>(double)>(integrand), qs)
                .value /
            std::sqrt(kTwoPiHbar);
    }
    return out;
}

namespace {

TailEstimate estimate_window_tail(const std::function<std::complex<double>(double)>& psi_x,
                                  double x_limit) {
    // Fit a local geometric decay |psi(L + d)| ~ r^d from two probes and
    // bound the remaining mass by the geometric integral on both sides.
    const double d = std::max(1e-2, 1e-3 * x_limit);
    TailEstimate est;
    double mass = 0.0;
    bool reliable = true;
    for (const double sgn : {+1.0, -1.0}) {
        const double a0 = std::abs(psi_x(sgn * x_limit));
        const double a1 = std::abs(psi_x(sgn * (x_limit + d)));
        if (a0 == 0.0 && a1 == 0.0) continue;
        const double r = (a0 > 0.0) ? a1 / a0 : 1.0;
        if (r >= 1.0 || !std::isfinite(r)) {
            reliable = false;
            mass += a0 * x_limit; // crude: no decay visible at the edge
            continue;
        }
        mass += a0 * d / (1.0 - r);
    }
    est.value = mass;
    est.reliable = reliable;
    return est;
}

} // namespace

InverseTransformResult gft_full_inverse(const std::function<std::complex<double>(double)>& psi_x,
                                        std::span<const double> p_grid, double x_limit,
                                        const DeformedAlgebra& algebra,
                                        const QuadratureSpec& spec) {
    if (!(x_limit > 0.0) || !std::isfinite(x_limit)) {
        throw DomainError("gft_full_inverse: x_limit must be positive and finite");
    }
    InverseTransformResult out;
    out.psi_p.resize(p_grid.size());
    out.tail = estimate_window_tail(psi_x, x_limit);
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const double zp = algebra.z(p_grid[i]);
        QuadratureSpec qs = spec;
        qs.oscillation_hint = std::fabs(zp) / kHbar;
        const auto integrand = [&](double x) -> std::complex<double> {
            const std::complex<double> v = psi_x(x);
            if (v == std::complex<double>(0.0, 0.0)) return v;
            return v * std::polar(1.0, -x * zp / kHbar);
        };
        out.psi_p[i] = integrate_finite(std::function<std::complex<double>(double)>(integrand),
                                        -x_limit, x_limit, qs)
                           .value /
                       std::sqrt(kTwoPiHbar);
    }
    return out;
}

InverseTransformResult gft_full_inverse(const PositionSamples& samples,
                                        std::span<const double> p_grid,
                                        const DeformedAlgebra& algebra) {
    check_uniform_grid(samples.x, "gft_full_inverse");
    if (samples.psi.size() != samples.x.size()) {
        throw UnsupportedGridError("gft_full_inverse: sample arrays disagree in size");
    }
    const double h = samples.x[1] - samples.x[0];
    InverseTransformResult out;
    out.psi_p.resize(p_grid.size());
    // Tail information is not available from a finite sample window; report
    // the edge magnitudes as the (unreliable) estimate.
    out.tail.value =
        (std::abs(samples.psi.front()) + std::abs(samples.psi.back())) * std::fabs(h);
    out.tail.reliable = false;

    std::vector<std::complex<double>> work(samples.x.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const double zp = algebra.z(p_grid[i]);
        for (std::size_t j = 0; j < samples.x.size(); ++j) {
            work[j] = samples.psi[j] * std::polar(1.0, -samples.x[j] * zp / kHbar);
        }
        out.psi_p[i] = simpson_uniform(work.data(), work.size(), h) / std::sqrt(kTwoPiHbar);
    }
    return out;
}

PositionSamples apply_p_in_x_rep(const PositionSamples& samples, const DeformedAlgebra& algebra,
                                 double q_band, std::size_t n_q) {
    check_uniform_grid(samples.x, "apply_p_in_x_rep");
    if (samples.psi.size() != samples.x.size()) {
        throw UnsupportedGridError("apply_p_in_x_rep: sample arrays disagree in size");
    }
    if (n_q < 5 || n_q % 2 == 0) {
        throw DomainError("apply_p_in_x_rep: n_q must be odd and >= 5");
    }
    const double h = samples.x[1] - samples.x[0];
    double band = q_band;
    const double nyquist = std::numbers::pi * kHbar / h;
    if (band <= 0.0) band = 0.9 * nyquist;
    band = std::min(band, algebra.z_limit() * (1.0 - 1e-12));

    // Forward: g(q) = (2 pi hbar)^{-1/2} integral dx e^{-i x q/hbar} psi(x).
    const std::size_t nx = samples.x.size();
    std::vector<double> qs(n_q);
    const double dq = 2.0 * band / static_cast<double>(n_q - 1);
    std::vector<std::complex<double>> g(n_q);
    std::vector<std::complex<double>> work(nx);
    for (std::size_t k = 0; k < n_q; ++k) {
        qs[k] = -band + dq * static_cast<double>(k);
        for (std::size_t j = 0; j < nx; ++j) {
            work[j] = samples.psi[j] * std::polar(1.0, -samples.x[j] * qs[k] / kHbar);
        }
        g[k] = simpson_uniform(work.data(), nx, h) / std::sqrt(kTwoPiHbar);
    }
    // Multiply by p(q) and transform back.
    for (std::size_t k = 0; k < n_q; ++k) g[k] *= algebra.z_inverse(qs[k]);

    PositionSamples out;
    out.x = samples.x;
    out.psi.resize(nx);
    std::vector<std::complex<double>> back(n_q);
    for (std::size_t j = 0; j < nx; ++j) {
        for (std::size_t k = 0; k < n_q; ++k) {
            back[k] = g[k] * std::polar(1.0, samples.x[j] * qs[k] / kHbar);
        }
        out.psi[j] = simpson_uniform(back.data(), n_q, dq) / std::sqrt(kTwoPiHbar);
    }
    return out;
}

double position_norm(const PositionSamples& samples) {
    check_uniform_grid(samples.x, "position_norm");
    std::vector<double> dens(samples.psi.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = std::norm(samples.psi[i]);
    return simpson_uniform(dens.data(), dens.size(), samples.x[1] - samples.x[0]);
}

} // namespace gup
