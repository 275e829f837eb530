#include "gup/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "gup/errors.hpp"

namespace gup {

namespace {

using Cplx = std::complex<double>;
using Fn = std::function<Cplx(double)>;

// 15-point Kronrod nodes with embedded 7-point Gauss rule (QUADPACK values).
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr std::array<double, 4> kWg = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

bool finite(const Cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

struct PanelEval {
    Cplx integral{0.0, 0.0};
    double error = 0.0;
    bool is_finite = true;
};

// QUADPACK-style component error: sharpened |K15 - G7| capped by the
// L1 deviation of the samples from their mean, with a roundoff floor.
double component_error(double err_raw, double resasc, double resk_abs) {
    double err = err_raw;
    if (resasc != 0.0 && err_raw != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err_raw / resasc, 1.5));
    }
    return std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resk_abs);
}

PanelEval eval_gk15(const Fn& g, double a, double b, long long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    PanelEval out;
    const Cplx fc = g(c);
    ++evals;
    out.is_finite = finite(fc);

    Cplx resk = fc * kWgk[7];
    Cplx resg = fc * kWg[3];
    std::array<Cplx, 7> flo{}, fhi{};
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        flo[j] = g(c - dx);
        fhi[j] = g(c + dx);
        evals += 2;
        out.is_finite = out.is_finite && finite(flo[j]) && finite(fhi[j]);
        resk += kWgk[j] * (flo[j] + fhi[j]);
        if (j % 2 == 1) resg += kWg[j / 2] * (flo[j] + fhi[j]);
    }
    out.integral = resk * h;
    if (!out.is_finite) {
        out.integral = Cplx(0.0, 0.0);
        out.error = std::numeric_limits<double>::infinity();
        return out;
    }

    const Cplx reskh = resk * 0.5;
    double resasc_re = kWgk[7] * std::fabs(fc.real() - reskh.real());
    double resasc_im = kWgk[7] * std::fabs(fc.imag() - reskh.imag());
    for (int j = 0; j < 7; ++j) {
        resasc_re += kWgk[j] * (std::fabs(flo[j].real() - reskh.real()) +
                                std::fabs(fhi[j].real() - reskh.real()));
        resasc_im += kWgk[j] * (std::fabs(flo[j].imag() - reskh.imag()) +
                                std::fabs(fhi[j].imag() - reskh.imag()));
    }
    const double ha = std::fabs(h);
    resasc_re *= ha;
    resasc_im *= ha;

    const Cplx diff = (resk - resg) * h;
    const double err_re = component_error(std::fabs(diff.real()), resasc_re,
                                          std::fabs(resk.real() * h));
    const double err_im = component_error(std::fabs(diff.imag()), resasc_im,
                                          std::fabs(resk.imag() * h));
    out.error = std::max(err_re, err_im);
    return out;
}

struct HeapPanel {
    double a = 0.0, b = 0.0;
    Cplx value{0.0, 0.0};
    double error = 0.0;
    int depth_left = 0;
};

struct PanelOrder {
    bool operator()(const HeapPanel& x, const HeapPanel& y) const {
        if (x.error != y.error) return x.error < y.error; // max-heap on error
        return x.a > y.a;                                 // deterministic tie-break
    }
};

// Global adaptive driver: panels are bisected worst-error-first until the
// summed error estimate meets the tolerance. Fully deterministic.
ComplexQuadratureResult run_adaptive(const Fn& g, const std::vector<double>& edges,
                                     const QuadratureSpec& spec, const char* what) {
    long long evals = 0;
    std::priority_queue<HeapPanel, std::vector<HeapPanel>, PanelOrder> heap;
    Cplx total{0.0, 0.0};
    double err_total = 0.0;

    auto add_panel = [&](double a, double b, int depth_left) {
        const PanelEval pe = eval_gk15(g, a, b, evals);
        total += pe.integral;
        err_total += pe.error;
        if (depth_left > 0) {
            heap.push(HeapPanel{a, b, pe.integral, pe.error, depth_left});
        }
    };

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        add_panel(edges[i], edges[i + 1], spec.max_depth);
    }

    const long long kMaxSplits = 200000;
    long long splits = 0;
    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (err_total <= tol) break;
        const double best =
            (total.imag() == 0.0) ? total.real() : std::abs(total);
        if (heap.empty() || splits >= kMaxSplits) {
            throw ConvergenceError(std::string(what) + ": adaptive quadrature failed to converge "
                                                       "(error bound above tolerance)",
                                   best, err_total);
        }
        HeapPanel top = heap.top();
        heap.pop();
        if (!(top.error > 0.0)) {
            throw ConvergenceError(std::string(what) + ": adaptive quadrature stalled", best,
                                   err_total);
        }
        const double m = 0.5 * (top.a + top.b);
        if (!(m > top.a && m < top.b)) {
            // Interval width at the floating-point floor: keep as-is.
            continue;
        }
        total -= top.value;
        err_total -= top.error;
        add_panel(top.a, m, top.depth_left - 1);
        add_panel(m, top.b, top.depth_left - 1);
        ++splits;
    }

    return ComplexQuadratureResult{total, err_total, evals};
}

std::vector<double> finite_edges(double a, double b, const QuadratureSpec& spec) {
    int n0 = 1;
    if (spec.oscillation_hint && *spec.oscillation_hint > 0.0) {
        const double need = std::fabs(b - a) * (*spec.oscillation_hint) / std::numbers::pi;
        n0 = static_cast<int>(std::clamp(std::ceil(need), 1.0, 4096.0));
    }
    std::vector<double> edges;
    edges.reserve(static_cast<std::size_t>(n0) + 1);
    for (int i = 0; i <= n0; ++i) {
        edges.push_back(a + (b - a) * static_cast<double>(i) / n0);
    }
    return edges;
}

// Panel edges in the mapped variable t in (0, 1] for the real-line integral.
// A geometric ladder toward t = 0 resolves tail decay; with an oscillation
// hint, additional edges keep the accumulated phase per panel below pi out
// to a bounded number of half-periods (adaptivity covers the remainder).
std::vector<double> real_line_edges(const QuadratureSpec& spec) {
    std::vector<double> edges{0.0};
    for (int k = 10; k >= 1; --k) {
        edges.push_back(std::ldexp(1.0, -k)); // 2^-10 .. 1/2
    }
    edges.push_back(1.0);
    if (spec.oscillation_hint && *spec.oscillation_hint > 0.0) {
        // Phase-pi panels out to |x| = 64; beyond that the adaptive pass
        // takes over (integrands here decay long before).
        const double omega = *spec.oscillation_hint;
        const int kmax = static_cast<int>(
            std::min(1024.0, std::ceil(omega * 64.0 / std::numbers::pi)));
        for (int k = 1; k <= kmax; ++k) {
            edges.push_back(1.0 / (1.0 + k * std::numbers::pi / omega));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Fn real_line_mapped(const Fn& g) {
    return [g](double t) -> Cplx {
        const double x = 1.0 / t - 1.0;
        Cplx s = g(x) + g(-x);
        if (s == Cplx(0.0, 0.0)) return s; // tails underflowed; avoid 0 * large
        return s / (t * t);
    };
}

Fn real_of(const std::function<double(double)>& g) {
    return [&g](double x) -> Cplx { return Cplx(g(x), 0.0); };
}

} // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& g, double a, double b,
                                  const QuadratureSpec& spec) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_finite: endpoints must be finite");
    }
    if (a == b) return QuadratureResult{0.0, 0.0, 0};
    const double sign = (b > a) ? 1.0 : -1.0;
    const auto r = run_adaptive(real_of(g), finite_edges(std::min(a, b), std::max(a, b), spec),
                                spec, "integrate_finite");
    return QuadratureResult{sign * r.value.real(), r.error_bound, r.evaluations};
}

ComplexQuadratureResult integrate_finite(const std::function<std::complex<double>(double)>& g,
                                         double a, double b, const QuadratureSpec& spec) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_finite: endpoints must be finite");
    }
    if (a == b) return ComplexQuadratureResult{};
    const double sign = (b > a) ? 1.0 : -1.0;
    auto r = run_adaptive(g, finite_edges(std::min(a, b), std::max(a, b), spec), spec,
                          "integrate_finite");
    r.value *= sign;
    return r;
}

QuadratureResult integrate_real_line(const std::function<double(double)>& g,
                                     const QuadratureSpec& spec) {
    const auto r =
        run_adaptive(real_line_mapped(real_of(g)), real_line_edges(spec), spec,
                     "integrate_real_line");
    return QuadratureResult{r.value.real(), r.error_bound, r.evaluations};
}

ComplexQuadratureResult integrate_real_line(const std::function<std::complex<double>(double)>& g,
                                            const QuadratureSpec& spec) {
    return run_adaptive(real_line_mapped(g), real_line_edges(spec), spec, "integrate_real_line");
}

namespace {

template <typename T>
T simpson_impl(const T* y, std::size_t n, double h) {
    if (n < 3) throw DomainError("simpson_uniform: need at least 3 samples");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("simpson_uniform: bad spacing");
    const std::size_t m = n - 1; // interval count
    const std::size_t main_end = (m % 2 == 0) ? m : m - 3;
    T acc = T(0.0);
    if (main_end > 0) {
        T s = y[0] + y[main_end];
        for (std::size_t i = 1; i < main_end; i += 2) s += 4.0 * y[i];
        for (std::size_t i = 2; i < main_end; i += 2) s += 2.0 * y[i];
        acc += s * (h / 3.0);
    }
    if (m % 2 != 0) {
        const T* t = y + main_end;
        acc += (3.0 * h / 8.0) * (t[0] + 3.0 * t[1] + 3.0 * t[2] + t[3]);
    }
    return acc;
}

} // namespace

double simpson_uniform(const double* y, std::size_t n, double h) {
    return simpson_impl(y, n, h);
}

std::complex<double> simpson_uniform(const std::complex<double>* y, std::size_t n, double h) {
    return simpson_impl(y, n, h);
}

} // namespace gup
