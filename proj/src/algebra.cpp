#include "gup/algebra.hpp"

#include <cmath>
#include <limits>

namespace gup {

namespace {

void require_finite(double p, const char* op) {
    if (!std::isfinite(p)) {
        throw DomainError(std::string(op) + ": momentum argument must be finite");
    }
}

} // namespace

std::string to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Standard: return "standard";
        case AlgebraKind::SqrtGUP: return "sqrt-gup";
        case AlgebraKind::KMM: return "kmm";
    }
    return "unknown";
}

DeformedAlgebra::DeformedAlgebra(AlgebraKind kind, double beta) : kind_(kind), beta_(beta) {}

DeformedAlgebra DeformedAlgebra::standard() {
    return DeformedAlgebra(AlgebraKind::Standard, 0.0);
}

DeformedAlgebra DeformedAlgebra::sqrt_gup(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("sqrt_gup: beta must be positive and finite");
    }
    return DeformedAlgebra(AlgebraKind::SqrtGUP, beta);
}

DeformedAlgebra DeformedAlgebra::kmm(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("kmm: beta must be positive and finite");
    }
    return DeformedAlgebra(AlgebraKind::KMM, beta);
}

double DeformedAlgebra::f(double p) const {
    require_finite(p, "f");
    switch (kind_) {
        case AlgebraKind::Standard:
            return 1.0;
        case AlgebraKind::SqrtGUP:
            return std::sqrt(1.0 + 2.0 * beta_ * p * p);
        case AlgebraKind::KMM:
            return 1.0 + beta_ * p * p;
    }
    return 1.0;
}

double DeformedAlgebra::z(double p) const {
    require_finite(p, "z");
    const double a = std::fabs(p);
    double value = 0.0;
    switch (kind_) {
        case AlgebraKind::Standard:
            value = a;
            break;
        case AlgebraKind::SqrtGUP: {
            const double s = std::sqrt(2.0 * beta_);
            // asinh(y) ~ log(2y) for huge y; the log form cannot overflow.
            if (a > 1e15 / s) {
                value = (std::numbers::ln2 + std::log(s) + std::log(a)) / s;
            } else {
                value = std::asinh(s * a) / s;
            }
            break;
        }
        case AlgebraKind::KMM: {
            const double s = std::sqrt(beta_);
            value = std::atan(s * a) / s;
            break;
        }
    }
    return std::copysign(value, p);
}

double DeformedAlgebra::u(double p) const {
    require_finite(p, "u");
    const double a = std::fabs(p);
    switch (kind_) {
        case AlgebraKind::Standard:
            return 0.5 * a * a;
        case AlgebraKind::SqrtGUP: {
            // (sqrt(1 + 2 beta p^2) - 1)/(2 beta), written to avoid
            // cancellation when 2 beta p^2 is small. When w overflows the
            // quotient form turns inf/inf; switch to the exact large-w
            // asymptote (relative error ~ 1/w) well before that.
            const double w = 2.0 * beta_ * a * a;
            if (w > 1e30) {
                const double sw = std::sqrt(2.0 * beta_) * a; // sqrt(w), overflow-free
                return (sw - 1.0) / (2.0 * beta_);
            }
            return (w / (std::sqrt(1.0 + w) + 1.0)) / (2.0 * beta_);
        }
        case AlgebraKind::KMM:
            return std::log1p(beta_ * a * a) / (2.0 * beta_);
    }
    return 0.0;
}

double DeformedAlgebra::measure_weight(double p) const {
    return 1.0 / f(p);
}

double DeformedAlgebra::z_inverse(double q) const {
    require_finite(q, "z_inverse");
    const double a = std::fabs(q);
    double value = 0.0;
    switch (kind_) {
        case AlgebraKind::Standard:
            value = a;
            break;
        case AlgebraKind::SqrtGUP: {
            const double s = std::sqrt(2.0 * beta_);
            value = std::sinh(s * a) / s;
            break;
        }
        case AlgebraKind::KMM: {
            const double s = std::sqrt(beta_);
            if (a >= 0.5 * M_PI / s) {
                throw DomainError("z_inverse: |q| outside the flattened domain of the KMM algebra");
            }
            value = std::tan(s * a) / s;
            break;
        }
    }
    return std::copysign(value, q);
}

double DeformedAlgebra::z_limit() const {
    switch (kind_) {
        case AlgebraKind::Standard:
        case AlgebraKind::SqrtGUP:
            return std::numeric_limits<double>::infinity();
        case AlgebraKind::KMM:
            return 0.5 * M_PI / std::sqrt(beta_);
    }
    return std::numeric_limits<double>::infinity();
}

CompactSupport::CompactSupport(const DeformedAlgebra& algebra, double p0_in) {
    if (!(p0_in > 0.0) || !std::isfinite(p0_in)) {
        throw DomainError("CompactSupport: p0 must be positive and finite");
    }
    p0 = p0_in;
    q0 = algebra.z(p0_in);
    alpha_minus = -q0;
    alpha_plus = q0;
}

} // namespace gup
