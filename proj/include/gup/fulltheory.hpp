#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "gup/algebra.hpp"
#include "gup/momentum_state.hpp"
#include "gup/quadrature.hpp"

namespace gup {

/// Generalized plane wave of the full (untruncated) theory: the position
/// representation of a momentum eigenstate at p,
///   e(x, p) = (2 pi hbar)^{-1/2} exp( i x z(p) / hbar ).
std::complex<double> modified_plane_wave(const DeformedAlgebra& algebra, double x, double p);

struct PositionSamples {
    std::vector<double> x;
    std::vector<std::complex<double>> psi;
};

/// Position-space wave function on x_grid:
///   psi(x) = (2 pi hbar)^{-1/2} integral dp/f(p) e^{i x z(p)/hbar} psi~(p).
/// One adaptive complex quadrature per grid point, with the oscillation
/// hint |x|/hbar (f >= 1 bounds the local frequency).
PositionSamples gft_full(const MomentumState& state, std::span<const double> x_grid,
                         const QuadratureSpec& spec = {});

struct TailEstimate {
    double value = 0.0;   ///< estimated |integral| mass beyond the window
    bool reliable = true; ///< false when the decay could not be estimated
};

struct InverseTransformResult {
    std::vector<std::complex<double>> psi_p; ///< momentum amplitude on p_grid
    TailEstimate tail;
};

/// Inverse transform from a closed-form position wave function, windowed to
/// [-x_limit, x_limit]:
///   psi~(p) = (2 pi hbar)^{-1/2} integral_{-L}^{L} dx e^{-i x z(p)/hbar} psi(x).
/// The neglected tail mass is estimated from the decay of |psi| at the
/// window edge and reported (not thrown) so callers can judge the window.
InverseTransformResult gft_full_inverse(const std::function<std::complex<double>(double)>& psi_x,
                                        std::span<const double> p_grid, double x_limit,
                                        const DeformedAlgebra& algebra,
                                        const QuadratureSpec& spec = {});

/// Sample-based inverse (composite Simpson over a uniform grid).
InverseTransformResult gft_full_inverse(const PositionSamples& samples,
                                        std::span<const double> p_grid,
                                        const DeformedAlgebra& algebra);

/// Momentum operator applied to position samples, spectrally: transform to
/// the flattening coordinate, multiply by p(q) = z^{-1}(q), transform back.
/// The grid must be uniform; q_band limits the spectral band (0 = choose
/// from the grid's Nyquist limit).
PositionSamples apply_p_in_x_rep(const PositionSamples& samples, const DeformedAlgebra& algebra,
                                 double q_band = 0.0, std::size_t n_q = 2049);

/// L2 norm of position samples (Simpson over the grid).
double position_norm(const PositionSamples& samples);

} // namespace gup
