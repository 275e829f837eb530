#include "gup/cosmology.hpp"

#include <cmath>
#include <numbers>

#include "gup/errors.hpp"

namespace gup {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const CosmoParams& params) {
    if (!(params.beta > 0.0)) throw DomainError("cosmology: beta must be positive");
    if (!(params.chi > 0.0)) throw DomainError("cosmology: chi must be positive");
    if (!(params.c > 0.0)) throw DomainError("cosmology: c must be positive");
    if (params.p0_truncation && !(*params.p0_truncation > 0.0)) {
        throw DomainError("cosmology: truncation cut-off must be positive");
    }
}

double deformation(double beta, double pv) {
    return std::sqrt(1.0 + 2.0 * beta * pv * pv);
}

} // namespace

double CosmoParams::drift_rate() const {
    return 3.0 * c * chi / (4.0 * kPi * kPi);
}

double pv_rhs(const CosmoParams& params, double pv) {
    validate(params);
    return params.drift_rate() * pv * pv * deformation(params.beta, pv);
}

double pv_closed_form(const CosmoParams& params, double t) {
    validate(params);
    const double s = params.drift_rate() * t + params.k_offset;
    const double arg = s * s - 2.0 * params.beta;
    if (!(arg > 0.0)) {
        throw DomainError("pv_closed_form: time at or past the curvature singularity");
    }
    return -1.0 / std::sqrt(arg);
}

HubbleResult hubble_of_pv(const CosmoParams& params, double pv) {
    validate(params);
    HubbleResult out;
    double p = std::fabs(pv);
    if (params.p0_truncation && p > *params.p0_truncation) {
        p = *params.p0_truncation;
        out.clamped = true;
    }
    out.H = (params.c * params.chi / (4.0 * kPi * kPi)) * p * deformation(params.beta, p);
    return out;
}

double rho_phi(const CosmoParams& params, double pv) {
    validate(params);
    return 1.5 * params.chi * pv * pv;
}

double rho_star(const CosmoParams& params) {
    validate(params);
    return 0.75 * params.chi / params.beta;
}

FriedmannCheck friedmann_check(const CosmoParams& params, double pv) {
    validate(params);
    FriedmannCheck out;
    // The constraint identity is a statement about the untruncated rate.
    const double h = (params.c * params.chi / (4.0 * kPi * kPi)) * std::fabs(pv) *
                     deformation(params.beta, pv);
    out.h2 = h * h;
    out.rho = rho_phi(params, pv);
    out.rho_max = rho_star(params);
    out.density_side = (params.c * params.c * params.chi / (24.0 * kPi * kPi * kPi * kPi)) *
                       out.rho * (1.0 + out.rho / out.rho_max);
    return out;
}

CosmoSolution solve_pv(const CosmoParams& params, double pv0,
                       std::span<const double> t_query, const OdeSpec& spec) {
    validate(params);
    if (t_query.size() < 2) throw DomainError("solve_pv: need at least two query times");

    const auto rhs = [&params](double, double pv) { return pv_rhs(params, pv); };
    const OdeSolution sol = solve_ode(rhs, pv0, t_query, spec);
    if (sol.blew_up) {
        throw SingularityError("solve_pv: curvature singularity inside the query range",
                               sol.blow_up_lower, sol.blow_up_upper);
    }

    CosmoSolution out;
    out.t.reserve(sol.points.size());
    out.p_v.reserve(sol.points.size());
    out.H.reserve(sol.points.size());
    out.rho.reserve(sol.points.size());
    for (const OdePoint& pt : sol.points) {
        const HubbleResult h = hubble_of_pv(params, pt.y);
        out.t.push_back(pt.t);
        out.p_v.push_back(pt.y);
        out.H.push_back(h.H);
        out.rho.push_back(rho_phi(params, pt.y));
        out.clamped_any = out.clamped_any || h.clamped;
    }
    return out;
}

} // namespace gup
