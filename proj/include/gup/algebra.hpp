#pragma once

#include <cmath>
#include <string>

#include "gup/errors.hpp"

namespace gup {

/// Planck's constant in the internal unit system. All library computations
/// use natural units; PhysicalUnits converts results for presentation.
inline constexpr double kHbar = 1.0;

enum class AlgebraKind {
    Standard, ///< f(p) = 1, ordinary quantum mechanics
    SqrtGUP,  ///< f(p) = sqrt(1 + 2 beta p^2)
    KMM       ///< f(p) = 1 + beta p^2
};

std::string to_string(AlgebraKind kind);

/// Deformed Heisenberg algebra [x, p] = i hbar f(p), together with the two
/// antiderivatives that every construction downstream needs:
///
///   z(p) = integral_0^p dq / f(q)     (flattening coordinate; [x,z] = i hbar)
///   u(p) = integral_0^p q dq / f(q)
///
/// Both are supplied in closed form per kind; z is odd and strictly
/// increasing, u is even and convex. The momentum measure of the theory is
/// dp / f(p), exposed via measure_weight().
class DeformedAlgebra {
public:
    static DeformedAlgebra standard();
    static DeformedAlgebra sqrt_gup(double beta);
    static DeformedAlgebra kmm(double beta);

    AlgebraKind kind() const { return kind_; }
    double beta() const { return beta_; }

    /// Commutator deformation factor f(p) >= 1.
    double f(double p) const;

    /// Flattening coordinate z(p); odd, strictly increasing.
    double z(double p) const;

    /// u(p) = integral of q/f(q); even, u(0) = 0.
    double u(double p) const;

    /// Weight of the deformed measure, 1/f(p).
    double measure_weight(double p) const;

    /// Inverse of z: momentum as a function of the flattening coordinate.
    double z_inverse(double q) const;

    /// sup of z(p) for p -> +infinity. Infinite for Standard and SqrtGUP,
    /// pi/(2 sqrt(beta)) for KMM (compact flattened domain).
    double z_limit() const;

private:
    DeformedAlgebra(AlgebraKind kind, double beta);

    AlgebraKind kind_;
    double beta_;
};

/// Momentum truncation [-p0, p0] together with its image under z.
struct CompactSupport {
    CompactSupport(const DeformedAlgebra& algebra, double p0);

    double p0;          ///< momentum cut-off, > 0
    double q0;          ///< z(p0), half-width of the flattened interval
    double alpha_minus; ///< -q0
    double alpha_plus;  ///< +q0
};

/// Presentation-layer unit conversions. Internally hbar = 1; the scales
/// below express results in the dimensionless units used throughout the
/// plots of deformed-algebra studies: lengths in hbar*sqrt(beta), momenta
/// in 1/sqrt(beta), packet times in m*hbar*beta, cosmological times in
/// sqrt(beta)/(c*chi).
struct PhysicalUnits {
    static double length_unit(double beta) { return kHbar * std::sqrt(beta); }
    static double momentum_unit(double beta) { return 1.0 / std::sqrt(beta); }
    static double packet_time_unit(double beta, double mass) { return mass * kHbar * beta; }
    static double cosmo_time_unit(double beta, double c, double chi) {
        return std::sqrt(beta) / (c * chi);
    }
};

} // namespace gup
