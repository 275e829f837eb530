#pragma once

#include <complex>
#include <vector>

#include "gup/algebra.hpp"
#include "gup/momentum_state.hpp"
#include "gup/quadrature.hpp"

namespace gup {

/// Two-parameter squeezed family over a deformed algebra:
///
///   Phi(p) = N exp( (hbar Lambda eta - i xi) z(p)/hbar - Lambda u(p) )
///
/// Lambda > 0 controls the width, eta the momentum expectation, xi the
/// position expectation. These states saturate the generalized uncertainty
/// bound of their algebra.
struct SqueezedParams {
    DeformedAlgebra algebra = DeformedAlgebra::standard();
    double lambda = 1.0;
    double eta = 0.0;
    double xi = 0.0;
};

/// Normalized squeezed state as a MomentumState (analytic derivative set).
MomentumState squeezed_state(const SqueezedParams& params, const QuadratureSpec& spec = {});

struct DeltaXEval {
    double delta_x = 0.0;
    double delta_p = 0.0;
    double exp_f = 0.0;
};

/// Position uncertainty of the squeezed state with the given (Lambda, eta),
/// evaluated from the three measure-weighted momentum integrals of the
/// family (no state construction needed). Lambda must be positive.
DeltaXEval delta_x_functional(const DeformedAlgebra& algebra, double lambda, double eta,
                              const QuadratureSpec& spec = {});

struct SurfacePoint {
    double lambda = 0.0;
    double eta = 0.0;
    double delta_x = 0.0;
    bool ok = true; ///< false when the evaluation failed (delta_x is NaN)
};

struct SurfaceResult {
    std::vector<SurfacePoint> table; ///< row-major, Lambda outer, eta inner
    int n_lambda = 0;
    int n_eta = 0;
    SurfacePoint grid_min;
    double refined_lambda = 0.0;
    double refined_eta = 0.0;
    double refined_delta_x = 0.0;
    /// True when the refined minimum is pinned at the lower Lambda edge
    /// (the no-minimal-length direction: Delta x keeps shrinking as
    /// Lambda -> 0 with eta near 0).
    bool at_lambda_lower_bound = false;
    int failed_points = 0;
};

/// Tabulates Delta x over a log-spaced Lambda grid and a linear eta grid,
/// then refines the grid minimum by coordinate descent (golden section per
/// axis, Lambda clamped to the given range). Grids need >= 2 points per
/// axis and positive Lambda bounds.
SurfaceResult minimize_delta_x(const DeformedAlgebra& algebra, double lambda_min,
                               double lambda_max, int n_lambda, double eta_min, double eta_max,
                               int n_eta, const QuadratureSpec& spec = {});

/// Uncertainty report for an arbitrary momentum state; see
/// UncertaintyReport for the bound convention.
UncertaintyReport verify_gup(const MomentumState& state);

/// Maximally localized state of the KMM algebra (f = 1 + beta p^2),
/// centered at position xi: amplitude (1 + beta p^2)^{-1/2} times the
/// translation phase, normalized under the deformed measure. It attains
/// Delta x = hbar sqrt(beta) while saturating the uncertainty bound.
MomentumState kmm_max_loc_state(double beta, double xi, const QuadratureSpec& spec = {});

} // namespace gup
