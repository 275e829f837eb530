#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gup/algebra.hpp"
#include "gup/momentum_state.hpp"
#include "gup/quadrature.hpp"

namespace gup {

/// The three dynamical frameworks compared by the free-packet experiments.
enum class Framework {
    StandardQM, ///< ordinary quantum mechanics on the full line
    FullGUP,    ///< sqrt-deformed algebra, untruncated momentum space
    CompactGUP  ///< sqrt-deformed algebra with momentum cut-off p0
};

std::string to_string(Framework fw);

struct WavePacketSpec {
    Framework framework = Framework::StandardQM;
    double beta = 1.0;          ///< ignored by StandardQM
    double p0 = 5.0;            ///< CompactGUP cut-off
    double sigma_p = 1.0;       ///< Gaussian width parameter (momentum^2 units)
    double mass = 1.0;
    double target_mean_p = 1.0; ///< calibrated <p> at t = 0
};

/// A calibrated packet: Gaussian profile (times the endpoint-vanishing
/// cos^2 window for CompactGUP), with the Gaussian center root-solved so
/// the deformed-measure momentum expectation hits target_mean_p.
struct WavePacket {
    WavePacketSpec spec;
    double center = 0.0; ///< calibrated Gaussian center parameter
    MomentumState state;
};

WavePacket build_packet(const WavePacketSpec& spec, const QuadratureSpec& quad = {});

struct DensityFrame {
    double t = 0.0;
    std::vector<double> x;    ///< position (quasi-position for CompactGUP)
    std::vector<double> abs2; ///< |Psi(x, t)|^2
    double grid_norm = 0.0;   ///< Simpson integral of abs2 over the grid
};

/// Time evolution projected onto a position grid: per grid point one
/// oscillatory quadrature with the phase x z(p)/hbar - t p^2/(2 m hbar).
/// StandardQM and FullGUP use the unitary full-line transform; CompactGUP
/// projects onto the localized (quasi-position) basis.
std::vector<DensityFrame> evolve_and_project(const WavePacket& packet,
                                             std::span<const double> times,
                                             std::span<const double> x_grid,
                                             const QuadratureSpec& quad = {});

/// Spreading observables, computed exactly in t from t = 0 momentum
/// moments (the free evolution only multiplies the amplitude by a phase):
///   <x>(t)    = t <f p>/m              (the packets start at <x> = 0)
///   dx(t)^2   = dx(0)^2 + t^2 (<f^2 p^2> - <f p>^2)/m^2
struct SpreadingReport {
    std::vector<double> t;
    std::vector<double> mean_x;
    std::vector<double> delta_x;
    std::vector<double> delta_x_rel; ///< delta_x(t)/delta_x(0)
    double mean_p = 0.0;             ///< constant in time
    double slope = 0.0;              ///< d<x>/dt = <f p>/m
    double delta_x0 = 0.0;
};

SpreadingReport spreading_report(const WavePacket& packet, std::span<const double> times);

struct DispersionTable {
    std::vector<double> k;
    std::vector<double> omega;
    std::vector<double> omega_prime;  ///< group velocity
    std::vector<double> omega_second; ///< group-velocity dispersion
};

/// Free dispersion relation per framework. StandardQM: omega = hbar
/// k^2/(2m). GUP frameworks: omega = sinh^2(sqrt(2 beta) hbar k)/(4 m hbar
/// beta), whose curvature grows exponentially in |k|. For CompactGUP the
/// wave number is bounded by k_max = z(p0)/hbar; out-of-range queries throw
/// a domain error naming the bound.
DispersionTable dispersion(Framework framework, double beta, double mass,
                           std::span<const double> k_grid, std::optional<double> p0 = {});

} // namespace gup
