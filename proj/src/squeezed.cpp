#include "gup/squeezed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gup/errors.hpp"
#include "gup/rootfind.hpp"

namespace gup {

namespace {

void check_squeezed_args(double lambda, double eta) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("squeezed family: Lambda must be positive and finite");
    }
    if (!std::isfinite(eta)) {
        throw DomainError("squeezed family: eta must be finite");
    }
}

// Exponent of |Phi|, shifted so its maximum (attained at p = eta) is zero:
// Lambda * (eta z(p) - u(p)) - Lambda * (eta z(eta) - u(eta)). Owns the
// algebra by value: instances are captured by lambdas that outlive the
// enclosing scope.
struct ShiftedExponent {
    DeformedAlgebra algebra;
    double lambda;
    double eta;
    double g0;

    ShiftedExponent(const DeformedAlgebra& a, double lam, double et)
        : algebra(a), lambda(lam), eta(et), g0(et * a.z(et) - a.u(et)) {}

    double operator()(double p) const {
        return lambda * (eta * algebra.z(p) - algebra.u(p) - g0);
    }
};

} // namespace

MomentumState squeezed_state(const SqueezedParams& params, const QuadratureSpec& spec) {
    check_squeezed_args(params.lambda, params.eta);
    if (!std::isfinite(params.xi)) throw DomainError("squeezed family: xi must be finite");

    const DeformedAlgebra algebra = params.algebra;
    const ShiftedExponent expo(algebra, params.lambda, params.eta);
    const double lambda = params.lambda;
    const double eta = params.eta;
    const double xi = params.xi;

    auto amp = [algebra, expo, xi](double p) -> std::complex<double> {
        const double mag = std::exp(expo(p));
        const double phase = -xi * algebra.z(p) / kHbar;
        return std::polar(mag, phase);
    };
    // Phi' = Phi * (Lambda (eta - p) - i xi / hbar) / f(p)
    auto damp = [algebra, expo, lambda, eta, xi](double p) -> std::complex<double> {
        const double mag = std::exp(expo(p));
        const double phase = -xi * algebra.z(p) / kHbar;
        const std::complex<double> val = std::polar(mag, phase);
        return val * std::complex<double>(lambda * (eta - p), -xi / kHbar) /
               algebra.f(p);
    };
    return MomentumState(algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                         StateSupport::full_line(), spec);
}

DeltaXEval delta_x_functional(const DeformedAlgebra& algebra, double lambda, double eta,
                              const QuadratureSpec& spec) {
    check_squeezed_args(lambda, eta);
    const ShiftedExponent expo(algebra, lambda, eta);

    const auto weighted = [&](auto&& mult) {
        const auto integrand = [&](double p) {
            const double w = std::exp(2.0 * expo(p));
            return w == 0.0 ? 0.0 : mult(p) * w;
        };
        return integrate_real_line(std::function<double(double)>(integrand), spec).value;
    };

    const double denom = weighted([&](double p) { return algebra.measure_weight(p); });
    if (!(denom > 0.0) || !std::isfinite(denom)) {
        throw ConvergenceError("delta_x_functional: degenerate normalization integral", 0.0,
                               std::numeric_limits<double>::infinity());
    }
    const double p2 = weighted([&](double p) { return p * p * algebra.measure_weight(p); });
    const double fbar = weighted([](double) { return 1.0; });

    const double var_p = p2 / denom - eta * eta; // <p> = eta for this family
    DeltaXEval out;
    out.delta_p = std::sqrt(std::max(var_p, 0.0));
    out.delta_x = kHbar * lambda * out.delta_p;
    out.exp_f = fbar / denom;
    return out;
}

SurfaceResult minimize_delta_x(const DeformedAlgebra& algebra, double lambda_min,
                               double lambda_max, int n_lambda, double eta_min, double eta_max,
                               int n_eta, const QuadratureSpec& spec) {
    if (!(lambda_min > 0.0) || !(lambda_max > lambda_min)) {
        throw DomainError("minimize_delta_x: need 0 < lambda_min < lambda_max");
    }
    if (n_lambda < 2 || n_eta < 2) {
        throw DomainError("minimize_delta_x: grids need at least 2 points per axis");
    }
    if (!(eta_max > eta_min)) {
        throw DomainError("minimize_delta_x: need eta_min < eta_max");
    }

    SurfaceResult res;
    res.n_lambda = n_lambda;
    res.n_eta = n_eta;
    res.table.reserve(static_cast<std::size_t>(n_lambda) * n_eta);

    const double log_lo = std::log(lambda_min);
    const double log_hi = std::log(lambda_max);
    const double dlog = (log_hi - log_lo) / (n_lambda - 1);
    const double deta = (eta_max - eta_min) / (n_eta - 1);

    res.grid_min.delta_x = std::numeric_limits<double>::infinity();
    res.grid_min.ok = false;
    for (int i = 0; i < n_lambda; ++i) {
        const double lam = std::exp(log_lo + i * dlog);
        for (int j = 0; j < n_eta; ++j) {
            const double eta = eta_min + j * deta;
            SurfacePoint pt{lam, eta, std::numeric_limits<double>::quiet_NaN(), false};
            try {
                pt.delta_x = delta_x_functional(algebra, lam, eta, spec).delta_x;
                pt.ok = true;
            } catch (const Error&) {
                ++res.failed_points;
            }
            if (pt.ok && pt.delta_x < res.grid_min.delta_x) res.grid_min = pt;
            res.table.push_back(pt);
        }
    }
    if (!res.grid_min.ok) {
        throw ConvergenceError("minimize_delta_x: every grid point failed", 0.0,
                               std::numeric_limits<double>::infinity());
    }

    // Coordinate-descent refinement around the grid minimum; brackets are
    // one grid cell per side, clamped to the requested ranges.
    const auto safe_eval = [&](double lam, double eta) {
        try {
            return delta_x_functional(algebra, lam, eta, spec).delta_x;
        } catch (const Error&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    double lam = res.grid_min.lambda;
    double eta = res.grid_min.eta;
    for (int sweep = 0; sweep < 40; ++sweep) {
        const double llo = std::max(log_lo, std::log(lam) - dlog);
        const double lhi = std::min(log_hi, std::log(lam) + dlog);
        const double lam_new =
            std::exp(golden_min([&](double ll) { return safe_eval(std::exp(ll), eta); }, llo,
                                lhi, 1e-7));
        const double elo = std::max(eta_min, eta - deta);
        const double ehi = std::min(eta_max, eta + deta);
        const double eta_new =
            golden_min([&](double e) { return safe_eval(lam_new, e); }, elo, ehi, 1e-7);
        const bool done =
            std::fabs(std::log(lam_new / lam)) < 1e-6 && std::fabs(eta_new - eta) < 1e-6;
        lam = lam_new;
        eta = eta_new;
        if (done) break;
    }
    res.refined_lambda = lam;
    res.refined_eta = eta;
    res.refined_delta_x = safe_eval(lam, eta);
    res.at_lambda_lower_bound = lam <= lambda_min * std::exp(dlog * 0.02);
    return res;
}

UncertaintyReport verify_gup(const MomentumState& state) {
    const MomentumMoments mm = momentum_moments(state);

    // <x> = Re[ i hbar * integral psi* psi' dp ]  (flat measure: f cancels)
    const std::complex<double> overlap = state.raw_integral([&state](double p) {
        return std::conj(state.amplitude(p)) * state.derivative(p);
    });
    const double exp_x = -kHbar * overlap.imag();

    // <x^dagger x> = hbar^2 * integral f |psi'|^2 dp
    const std::complex<double> xx = state.raw_integral([&state](double p) {
        const double fd = std::norm(state.derivative(p));
        return std::complex<double>(fd == 0.0 ? 0.0 : state.algebra().f(p) * fd, 0.0);
    });
    const double mean_xx = kHbar * kHbar * xx.real();

    UncertaintyReport rep;
    rep.exp_p = mm.mean_p;
    rep.exp_f = mm.mean_f;
    rep.exp_x = exp_x;
    rep.delta_x = std::sqrt(std::max(mean_xx - exp_x * exp_x, 0.0));
    rep.delta_p = std::sqrt(std::max(mm.mean_p2 - mm.mean_p * mm.mean_p, 0.0));
    rep.gup_slack = rep.delta_x * rep.delta_p - 0.5 * kHbar * std::fabs(mm.mean_f);
    return rep;
}

MomentumState kmm_max_loc_state(double beta, double xi, const QuadratureSpec& spec) {
    const DeformedAlgebra algebra = DeformedAlgebra::kmm(beta);
    if (!std::isfinite(xi)) throw DomainError("kmm_max_loc_state: xi must be finite");

    auto amp = [algebra, beta, xi](double p) -> std::complex<double> {
        const double mag = 1.0 / std::sqrt(1.0 + beta * p * p);
        const double phase = -xi * algebra.z(p) / kHbar;
        return std::polar(mag, phase);
    };
    auto damp = [algebra, beta, xi](double p) -> std::complex<double> {
        const double fp = 1.0 + beta * p * p;
        const double mag = 1.0 / std::sqrt(fp);
        const double phase = -xi * algebra.z(p) / kHbar;
        const std::complex<double> val = std::polar(mag, phase);
        return val * std::complex<double>(-beta * p / fp, -xi / (kHbar * fp));
    };
    return MomentumState(algebra, amp, std::optional<MomentumState::Amplitude>(damp),
                         StateSupport::full_line(), spec);
}

} // namespace gup
