#pragma once

#include <cmath>
#include <functional>

#include "gup/errors.hpp"

namespace gup {

/// Root of g on [lo, hi] by the Illinois variant of regula falsi.
/// Requires a sign change over the bracket.
inline double find_root(const std::function<double(double)>& g, double lo, double hi,
                        double x_tol = 1e-12, double g_tol = 1e-12, int max_iter = 200) {
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) {
        throw CalibrationError("find_root: bracket does not straddle a root");
    }
    double a = lo, b = hi, fa = flo, fb = fhi;
    int side = 0;
    for (int it = 0; it < max_iter; ++it) {
        const double c = (fa * b - fb * a) / (fa - fb);
        const double fc = g(c);
        if (std::fabs(fc) <= g_tol || std::fabs(b - a) <= x_tol) return c;
        if (fc * fb < 0.0) {
            a = b;
            fa = fb;
            side = 0;
        } else {
            if (side == 1) fa *= 0.5; // Illinois trick against stagnation
            side = 1;
        }
        b = c;
        fb = fc;
    }
    throw CalibrationError("find_root: no convergence within iteration budget");
}

/// Minimum of g on [lo, hi] by golden-section search. Returns the argmin;
/// tolerance is on the argument.
inline double golden_min(const std::function<double(double)>& g, double lo, double hi,
                         double x_tol = 1e-8) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > x_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace gup
