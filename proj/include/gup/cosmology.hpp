#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gup/ode.hpp"

namespace gup {

/// Minisuperspace model of a flat FRW universe sourced by a free scalar
/// field, with the sqrt-deformed bracket. The volume-conjugate momentum
/// p_v obeys dp_v/dt = A p_v^2 sqrt(1 + 2 beta p_v^2), A = 3 c chi/(4 pi^2),
/// and the Hubble rate is H = (c chi/(4 pi^2)) |p_v| sqrt(1 + 2 beta p_v^2).
struct CosmoParams {
    double beta = 1.0;
    double chi = 4.0 * 9.869604401089358 / 3.0; ///< 4 pi^2 / 3, makes A = c
    double c = 1.0;
    double k_offset = 1.4142135623730951; ///< integration constant of the closed form
    std::optional<double> p0_truncation;  ///< momentum cut-off of the truncated theory

    double drift_rate() const; ///< A = 3 c chi / (4 pi^2)
};

double pv_rhs(const CosmoParams& params, double pv);

/// Exact solution p_v(t) = -1 / sqrt((A t + k)^2 - 2 beta) of the drift
/// equation; throws DomainError at or past the curvature singularity
/// (A t + k)^2 <= 2 beta.
double pv_closed_form(const CosmoParams& params, double t);

struct HubbleResult {
    double H = 0.0;
    bool clamped = false; ///< |p_v| exceeded the cut-off; H held at H(p0)
};

HubbleResult hubble_of_pv(const CosmoParams& params, double pv);

double rho_phi(const CosmoParams& params, double pv); ///< (3 chi / 2) p_v^2
double rho_star(const CosmoParams& params);           ///< 3 chi / (4 beta)

/// Both sides of the deformed Friedmann constraint
///   H^2 = (c^2 chi / (24 pi^4)) rho (1 + rho / rho_star),
/// evaluated from the same p_v; they agree identically.
struct FriedmannCheck {
    double h2 = 0.0;
    double density_side = 0.0;
    double rho = 0.0;
    double rho_max = 0.0;
};

FriedmannCheck friedmann_check(const CosmoParams& params, double pv);

struct CosmoSolution {
    std::vector<double> t;
    std::vector<double> p_v;
    std::vector<double> H;
    std::vector<double> rho;
    bool clamped_any = false; ///< some H value hit the truncation cut-off
};

/// Integrates the drift equation from (t_query.front(), pv0) through the
/// remaining query times (monotonic either direction). If the solution
/// blows up before the last query — the classical singularity — a
/// SingularityError carrying the bracketing interval is thrown.
CosmoSolution solve_pv(const CosmoParams& params, double pv0,
                       std::span<const double> t_query, const OdeSpec& spec = {});

} // namespace gup
