#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gup/algebra.hpp"
#include "gup/momentum_state.hpp"
#include "gup/quadrature.hpp"

namespace gup {

/// Truncated momentum space [-p0, p0] over a deformed algebra. The physical
/// domain consists of wave functions vanishing at the interval endpoints;
/// the flattening coordinate maps it onto [-q0, q0].
struct TruncatedSpace {
    TruncatedSpace(DeformedAlgebra algebra_in, double p0_in)
        : algebra(algebra_in), support(algebra_in, p0_in) {}

    DeformedAlgebra algebra;
    CompactSupport support;

    double p0() const { return support.p0; }
    double q0() const { return support.q0; }
};

/// n-th maximally localized state centered at position xi:
///
///   Psi(p) = q0^{-1/2} e^{-i xi z(p)/hbar} sin( n pi (z(p) + q0) / (2 q0) )
///
/// (n = 1 is the cosine-profile ground state). Vanishes identically at
/// +-p0; Delta x = n pi hbar / (2 q0) independent of xi.
MomentumState max_loc_state(const TruncatedSpace& space, double xi, int n = 1,
                            const QuadratureSpec& spec = {});

/// Superposition sum_k c_k Psi_k of the first coeffs.size() localization
/// modes at xi = 0, normalized. All such states live in the physical domain.
MomentumState truncated_mode_superposition(const TruncatedSpace& space,
                                           std::span<const std::complex<double>> coeffs,
                                           const QuadratureSpec& spec = {});

/// Minimal position uncertainty of the n-th localization branch,
/// n pi hbar / (2 q0); for the sqrt-deformed algebra this equals
/// n sqrt(beta/2) pi hbar / asinh(sqrt(2 beta) p0).
double delta_x_min(const TruncatedSpace& space, int n = 1);

/// The two ends of the bound chain at the special cut-off p0 = 1/sqrt(2
/// beta): the series lower bound (1/2) sqrt(5/2) hbar sqrt(beta) for any
/// physical state, and the minimal uncertainty actually attained by the
/// localized states. ratio = delta_x_min / lower_bound.
struct SeriesBounds {
    double lower_bound = 0.0;
    double delta_x_min = 0.0;
    double ratio = 0.0;
};

SeriesBounds series_bounds(const TruncatedSpace& space);

/// Overlap <Psi_xi' | Psi_xi> of two ground-branch localized states, in
/// closed form: pi^2 sin(w) / (w (pi^2 - w^2)) with w = (xi - xi') q0 /
/// hbar. Removable singularities at w = 0 and |w| = pi are evaluated by
/// series. Real-valued; returned as complex for uniformity.
std::complex<double> maxloc_overlap(const TruncatedSpace& space, double xi, double xi_prime);

struct QuasiPositionSamples {
    std::vector<double> xi;
    std::vector<std::complex<double>> psi;
};

/// Quasi-position transform of a raw (not necessarily normalized)
/// momentum amplitude at one point xi:
///
///   psi(xi) = integral_{-p0}^{p0} dp/f q0^{-1/2} cos( pi z/(2 q0) )
///             e^{i xi z/hbar} amp(p)
std::complex<double> quasi_position_transform_point(
    const TruncatedSpace& space, const std::function<std::complex<double>(double)>& amplitude,
    double xi, const QuadratureSpec& spec = {});

/// Quasi-position wave function of a physical state on xi_grid. Requires a
/// compact-support state vanishing at the endpoints.
QuasiPositionSamples gft_truncated(const MomentumState& state, std::span<const double> xi_grid,
                                   const QuadratureSpec& spec = {});

/// d^order/dxi^order of the quasi-position wave function at xi (the
/// transform kernel brings down (i z/hbar)^order).
std::complex<double> quasi_wavefunction_derivative(const MomentumState& state, double xi,
                                                   int order, const QuadratureSpec& spec = {});

/// Image of a momentum eigenstate delta(p - p_tilde) under the
/// quasi-position transform (free-particle profile), handled analytically.
std::complex<double> quasi_plane_wave(const TruncatedSpace& space, double p_tilde, double xi);

struct TruncatedInverseResult {
    std::vector<std::complex<double>> psi_q; ///< momentum amplitude vs q = z(p)
    double tail_estimate = 0.0;              ///< neglected |psi(xi)| mass estimate
};

/// Inverse quasi-position transform on interior points of [-q0, q0]:
///
///   psi~(q) = sqrt(q0) / (2 pi hbar cos(pi q/(2 q0))) *
///             integral_{-L}^{L} dxi psi(xi) e^{-i xi q/hbar}
///
/// The map is not an isometry (the localized basis is not orthogonal), and
/// the cos factor blows up at |q| -> q0: queries with |q| > q0 (1 -
/// interior_margin) raise a singularity error.
TruncatedInverseResult gft_truncated_inverse(
    const std::function<std::complex<double>(double)>& psi_xi, std::span<const double> q_grid,
    double xi_limit, const TruncatedSpace& space, const QuadratureSpec& spec = {},
    double interior_margin = 1e-3);

TruncatedInverseResult gft_truncated_inverse(const QuasiPositionSamples& samples,
                                             std::span<const double> q_grid,
                                             const TruncatedSpace& space,
                                             double interior_margin = 1e-3);

} // namespace gup
