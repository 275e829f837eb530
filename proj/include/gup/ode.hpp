#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gup {

enum class OdeMethod {
    RK4Fixed,     ///< classical fourth-order rule with a fixed step
    RK45Adaptive  ///< Dormand-Prince 5(4) embedded pair with step control
};

struct OdeSpec {
    OdeMethod method = OdeMethod::RK45Adaptive;
    double fixed_step = 1e-3;       ///< RK4Fixed step size (positive)
    double abs_tol = 1e-10;         ///< RK45 absolute tolerance
    double rel_tol = 1e-10;         ///< RK45 relative tolerance
    double blow_up_ceiling = 1e12;  ///< |y| above this counts as a blow-up
    double initial_step = 0.0;      ///< 0 = choose automatically
};

struct OdePoint {
    double t = 0.0;
    double y = 0.0;
};

struct OdeSolution {
    /// Solution sampled at the requested times, in request order. When a
    /// blow-up interrupts integration only the times reached are present.
    std::vector<OdePoint> points;

    bool blew_up = false;
    /// Time bracket [lower, upper] (ordered) containing the blow-up; valid
    /// only when blew_up is set.
    double blow_up_lower = 0.0;
    double blow_up_upper = 0.0;

    long long steps_taken = 0;
    long long steps_rejected = 0;
};

/// Integrates dy/dt = rhs(t, y) from t_query.front() (where y = y0) through
/// the remaining query times, which must be strictly monotonic (increasing
/// or decreasing; backward integration is supported). Steps never cross a
/// query time, so sampled values carry full integration accuracy.
///
/// Integration stops early when |y| exceeds blow_up_ceiling or the right
/// hand side stops being finite; the solution then reports a time bracket
/// enclosing the blow-up.
OdeSolution solve_ode(const std::function<double(double, double)>& rhs, double y0,
                      std::span<const double> t_query, const OdeSpec& spec = {});

} // namespace gup
