#include "gup/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gup/errors.hpp"

namespace gup {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,       7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct StepResult {
    double y5 = 0.0;     // fifth-order solution
    double err = 0.0;    // scaled error estimate
    bool finite = true;
};

StepResult dp_step(const std::function<double(double, double)>& rhs, double t, double y, double h,
                   double abs_tol, double rel_tol) {
    double k[7];
    StepResult out;
    k[0] = rhs(t, y);
    for (int i = 1; i < 7; ++i) {
        double yi = y;
        for (int j = 0; j < i; ++j) yi += h * kA[i][j] * k[j];
        if (!std::isfinite(yi)) {
            out.finite = false;
            return out;
        }
        k[i] = rhs(t + kC[i] * h, yi);
        if (!std::isfinite(k[i])) {
            out.finite = false;
            return out;
        }
    }
    double y5 = y, y4 = y;
    for (int i = 0; i < 7; ++i) {
        y5 += h * kB5[i] * k[i];
        y4 += h * kB4[i] * k[i];
    }
    if (!std::isfinite(y5) || !std::isfinite(y4)) {
        out.finite = false;
        return out;
    }
    const double scale = abs_tol + rel_tol * std::max(std::fabs(y), std::fabs(y5));
    out.y5 = y5;
    out.err = std::fabs(y5 - y4) / scale;
    return out;
}

double rk4_step(const std::function<double(double, double)>& rhs, double t, double y, double h) {
    const double k1 = rhs(t, y);
    const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = rhs(t + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

OdeSolution solve_ode(const std::function<double(double, double)>& rhs, double y0,
                      std::span<const double> t_query, const OdeSpec& spec) {
    if (t_query.size() < 1) {
        throw DomainError("solve_ode: need at least one query time");
    }
    const double dir = (t_query.size() >= 2 && t_query[1] < t_query[0]) ? -1.0 : 1.0;
    for (std::size_t i = 0; i + 1 < t_query.size(); ++i) {
        if (!((t_query[i + 1] - t_query[i]) * dir > 0.0)) {
            throw DomainError("solve_ode: query times must be strictly monotonic");
        }
    }

    OdeSolution sol;
    sol.points.push_back({t_query[0], y0});

    double t = t_query[0];
    double y = y0;

    auto record_blow_up = [&](double t_ok, double t_beyond) {
        sol.blew_up = true;
        sol.blow_up_lower = std::min(t_ok, t_beyond);
        sol.blow_up_upper = std::max(t_ok, t_beyond);
    };

    if (std::fabs(y) > spec.blow_up_ceiling) {
        record_blow_up(t, t);
        return sol;
    }

    if (spec.method == OdeMethod::RK4Fixed) {
        if (!(spec.fixed_step > 0.0)) throw DomainError("solve_ode: fixed_step must be positive");
        for (std::size_t qi = 1; qi < t_query.size(); ++qi) {
            const double target = t_query[qi];
            while ((target - t) * dir > 0.0) {
                const double h = dir * std::min(spec.fixed_step, std::fabs(target - t));
                const double y_new = rk4_step(rhs, t, y, h);
                ++sol.steps_taken;
                if (!std::isfinite(y_new) || std::fabs(y_new) > spec.blow_up_ceiling) {
                    record_blow_up(t, t + h);
                    return sol;
                }
                t += h;
                y = y_new;
            }
            t = target;
            sol.points.push_back({t, y});
        }
        return sol;
    }

    // RK45 adaptive
    double span_scale = std::fabs(t_query.back() - t_query.front());
    if (span_scale == 0.0) span_scale = 1.0;
    double h = spec.initial_step > 0.0 ? spec.initial_step : span_scale / 100.0;

    for (std::size_t qi = 1; qi < t_query.size(); ++qi) {
        const double target = t_query[qi];
        while ((target - t) * dir > 0.0) {
            const double remaining = std::fabs(target - t);
            double h_try = std::min(h, remaining);
            const double h_min = 16.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(std::fabs(t), 1.0);
            bool accepted = false;
            while (!accepted) {
                const StepResult st =
                    dp_step(rhs, t, y, dir * h_try, spec.abs_tol, spec.rel_tol);
                if (!st.finite || std::fabs(st.y5) > spec.blow_up_ceiling) {
                    if (st.finite && h_try <= h_min * 2.0) {
                        // Step floor reached while still exceeding the
                        // ceiling: the blow-up is inside this tiny step.
                        record_blow_up(t, t + dir * h_try);
                        return sol;
                    }
                    if (!st.finite && h_try <= h_min * 2.0) {
                        record_blow_up(t, t + dir * h_try);
                        return sol;
                    }
                    ++sol.steps_rejected;
                    h_try *= 0.25;
                    if (h_try < h_min) {
                        record_blow_up(t, t + dir * h_try * 4.0);
                        return sol;
                    }
                    continue;
                }
                if (st.err <= 1.0) {
                    t += dir * h_try;
                    y = st.y5;
                    ++sol.steps_taken;
                    const double grow =
                        (st.err > 0.0) ? 0.9 * std::pow(st.err, -0.2) : 5.0;
                    h = h_try * std::clamp(grow, 0.2, 5.0);
                    accepted = true;
                } else {
                    ++sol.steps_rejected;
                    const double shrink = std::clamp(0.9 * std::pow(st.err, -0.2), 0.1, 0.9);
                    h_try *= shrink;
                    if (h_try < h_min) {
                        throw ConvergenceError("solve_ode: step size underflow", y, st.err);
                    }
                }
            }
            if (std::fabs(y) > spec.blow_up_ceiling) {
                record_blow_up(t - dir * h_try, t);
                return sol;
            }
        }
        t = target;
        sol.points.push_back({t, y});
    }
    return sol;
}

} // namespace gup
