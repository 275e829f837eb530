// gupqm: command-line front end for the deformed-algebra laboratory.
// Every subcommand prints a CSV or JSON table built from the library
// modules; identical invocations produce identical bytes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gup/algebra.hpp"
#include "gup/compacttheory.hpp"
#include "gup/cosmology.hpp"
#include "gup/errors.hpp"
#include "gup/fulltheory.hpp"
#include "gup/momentum_state.hpp"
#include "gup/output.hpp"
#include "gup/squeezed.hpp"
#include "gup/wavepacket.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonOpts {
    std::string format = "csv";
    std::string output = "-";
    std::string units = "scaled";
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", opts.output, "output path ('-' = stdout)")
        ->capture_default_str();
    sub->add_option("--units", opts.units, "unit system for the emitted values")
        ->check(CLI::IsMember({"scaled", "paper"}))
        ->capture_default_str();
}

/// Characteristic units of the deformation scale: space hbar*sqrt(beta),
/// momentum 1/sqrt(beta), time m*hbar*beta.
struct UnitScales {
    double length = 1.0;
    double momentum = 1.0;
    double time = 1.0;
};

UnitScales unit_scales(const CommonOpts& opts, double beta, double mass = 1.0) {
    UnitScales u;
    if (opts.units == "paper") {
        u.length = gup::kHbar * std::sqrt(beta);
        u.momentum = 1.0 / std::sqrt(beta);
        u.time = mass * gup::kHbar * beta;
    }
    return u;
}

std::string resolve_output(const std::string& path) {
    if (path.empty() || path == "-") return path;
    if (path.front() == '/') return path;
    if (const char* dir = std::getenv("GUPQM_OUTPUT_DIR"); dir && *dir) {
        return std::string(dir) + "/" + path;
    }
    return path;
}

using Meta = std::map<std::string, std::string>;

template <typename T>
void meta_put(Meta& meta, const std::string& key, const T& value) {
    meta[key] = fmt::format("{}", value);
}

/// Standard single-table emission honoring --format/--output.
void emit_table(const gup::Table& table, const Meta& meta, const CommonOpts& opts) {
    const std::string out = resolve_output(opts.output);
    if (opts.format == "json") {
        gup::write_text(out, gup::to_json(table, meta));
    } else {
        gup::write_text(out, gup::to_csv(table));
    }
}

nlohmann::json records_json(const gup::Table& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json rec = nlohmann::json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) rec[table.columns[i]] = row[i];
        arr.push_back(std::move(rec));
    }
    return arr;
}

nlohmann::json meta_json(const Meta& meta) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : meta) j[k] = v;
    return j;
}

// ---------------------------------------------------------------- surface

struct SurfaceArgs {
    CommonOpts common;
    double beta = 1.0;
    double lambda_min = 1e-2, lambda_max = 10.0;
    double eta_min = -3.0, eta_max = 3.0;
    int n_lambda = 25, n_eta = 25;
};

void run_surface(const SurfaceArgs& a) {
    const auto algebra = gup::DeformedAlgebra::sqrt_gup(a.beta);
    const gup::SurfaceResult res =
        gup::minimize_delta_x(algebra, a.lambda_min, a.lambda_max, a.n_lambda, a.eta_min,
                              a.eta_max, a.n_eta);
    if (res.failed_points > 0) {
        fmt::print(stderr, "warning: {} surface points failed to converge (emitted as nan)\n",
                   res.failed_points);
    }
    const UnitScales u = unit_scales(a.common, a.beta);

    gup::Table table;
    table.columns = {"lambda", "eta", "delta_x"};
    // lambda carries inverse momentum-squared units, i.e. units of beta.
    const double lambda_unit = (u.length * u.length) / (gup::kHbar * gup::kHbar);
    for (const gup::SurfacePoint& pt : res.table) {
        table.add_row({pt.lambda / lambda_unit, pt.eta / u.momentum, pt.delta_x / u.length});
    }

    Meta meta;
    meta_put(meta, "subcommand", "surface");
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "lambda_min", a.lambda_min);
    meta_put(meta, "lambda_max", a.lambda_max);
    meta_put(meta, "eta_min", a.eta_min);
    meta_put(meta, "eta_max", a.eta_max);
    meta_put(meta, "n_lambda", a.n_lambda);
    meta_put(meta, "n_eta", a.n_eta);
    meta_put(meta, "units", a.common.units);
    meta_put(meta, "grid_min_lambda", res.grid_min.lambda);
    meta_put(meta, "grid_min_eta", res.grid_min.eta);
    meta_put(meta, "grid_min_delta_x", res.grid_min.delta_x);
    meta_put(meta, "refined_lambda", res.refined_lambda);
    meta_put(meta, "refined_eta", res.refined_eta);
    meta_put(meta, "refined_delta_x", res.refined_delta_x);
    meta_put(meta, "at_lambda_lower_bound", res.at_lambda_lower_bound);
    meta_put(meta, "failed_points", res.failed_points);
    emit_table(table, meta, a.common);
}

// ----------------------------------------------------------------- maxloc

struct MaxlocArgs {
    CommonOpts common;
    double beta = 1.0;
    double p0 = 5.0;
    double xi = 0.0;
    int n = 1;
    int samples = 201;
    int scan = 0;
    unsigned seed = 12345;
};

void run_maxloc(const MaxlocArgs& a) {
    const gup::TruncatedSpace space(gup::DeformedAlgebra::sqrt_gup(a.beta), a.p0);
    const gup::MomentumState state = gup::max_loc_state(space, a.xi, a.n);
    const gup::UncertaintyReport report = gup::verify_gup(state);
    const UnitScales u = unit_scales(a.common, a.beta);

    gup::Table table;
    table.columns = {"p", "re_psi", "im_psi", "abs2"};
    for (int i = 0; i < a.samples; ++i) {
        const double p = -a.p0 + 2.0 * a.p0 * i / (a.samples - 1);
        const std::complex<double> psi = state.amplitude(p);
        table.add_row({p / u.momentum, psi.real(), psi.imag(), std::norm(psi)});
    }

    nlohmann::json summary;
    summary["delta_x_min"] = gup::delta_x_min(space, a.n) / u.length;
    summary["norm"] = state.norm();
    summary["mean_x"] = report.exp_x / u.length;
    summary["delta_x"] = report.delta_x / u.length;
    if (a.scan > 0) {
        std::mt19937 rng(a.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        double best = std::numeric_limits<double>::infinity();
        for (int s = 0; s < a.scan; ++s) {
            std::vector<std::complex<double>> coeffs(6);
            for (auto& c : coeffs) c = {gauss(rng), gauss(rng)};
            const auto super = gup::truncated_mode_superposition(space, coeffs);
            best = std::min(best, gup::verify_gup(super).delta_x);
        }
        summary["scan_min_delta_x"] = best / u.length;
        summary["scan_size"] = a.scan;
        summary["seed"] = a.seed;
    }

    Meta meta;
    meta_put(meta, "subcommand", "maxloc");
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "p0", a.p0);
    meta_put(meta, "xi", a.xi);
    meta_put(meta, "n", a.n);
    meta_put(meta, "units", a.common.units);

    const std::string out = resolve_output(a.common.output);
    if (a.common.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(meta);
        j["records"] = records_json(table);
        j["summary"] = summary;
        gup::write_text(out, j.dump(2) + "\n");
    } else {
        const std::string summary_text = summary.dump(2) + "\n";
        if (out.empty() || out == "-") {
            gup::write_text(out, gup::to_csv(table) + "\n" + summary_text);
        } else {
            gup::write_text(out, gup::to_csv(table));
            gup::write_text("-", summary_text);
        }
    }
}

// ------------------------------------------------------------- wavepacket

struct WavepacketArgs {
    CommonOpts common;
    std::string framework = "standard";
    double beta = 1.0;
    double p0 = 5.0;
    double sigma_p = 1.0;
    double mean_p = 1.0;
    double mass = 1.0;
    std::vector<double> times;
    std::vector<double> grid; // min, max, n
    int spreading_n = 51;
};

gup::Framework parse_framework(const std::string& name) {
    if (name == "standard") return gup::Framework::StandardQM;
    if (name == "full") return gup::Framework::FullGUP;
    return gup::Framework::CompactGUP;
}

void run_wavepacket(const WavepacketArgs& a) {
    gup::WavePacketSpec spec;
    spec.framework = parse_framework(a.framework);
    spec.beta = a.beta;
    spec.p0 = a.p0;
    spec.sigma_p = a.sigma_p;
    spec.mass = a.mass;
    spec.target_mean_p = a.mean_p;
    const gup::WavePacket packet = gup::build_packet(spec);

    std::vector<double> times = a.times;
    if (times.empty()) times = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> gridv = a.grid;
    if (gridv.empty()) gridv = {-25.0, 55.0, 161.0};
    const int nx = static_cast<int>(gridv[2]);
    if (nx < 5 || !(gridv[1] > gridv[0])) {
        throw gup::DomainError("wavepacket: --grid needs min < max and n >= 5");
    }
    std::vector<double> x_grid(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        x_grid[static_cast<std::size_t>(i)] = gridv[0] + (gridv[1] - gridv[0]) * i / (nx - 1);
    }

    const auto frames = gup::evolve_and_project(packet, times, x_grid);

    const double t_max = *std::max_element(times.begin(), times.end());
    std::vector<double> spread_times;
    if (t_max > 0.0 && a.spreading_n >= 2) {
        spread_times.resize(static_cast<std::size_t>(a.spreading_n));
        for (int i = 0; i < a.spreading_n; ++i) {
            spread_times[static_cast<std::size_t>(i)] = t_max * i / (a.spreading_n - 1);
        }
    } else {
        spread_times = times;
    }
    const gup::SpreadingReport rep = gup::spreading_report(packet, spread_times);

    const UnitScales u = unit_scales(a.common, a.beta, a.mass);
    gup::Table density;
    density.columns = {"t", "x", "abs2"};
    for (const gup::DensityFrame& fr : frames) {
        for (std::size_t i = 0; i < fr.x.size(); ++i) {
            density.add_row({fr.t / u.time, fr.x[i] / u.length, fr.abs2[i] * u.length});
        }
    }
    gup::Table spreading;
    spreading.columns = {"t", "mean_x", "delta_x", "delta_x_rel", "mean_p"};
    for (std::size_t i = 0; i < rep.t.size(); ++i) {
        spreading.add_row({rep.t[i] / u.time, rep.mean_x[i] / u.length,
                           rep.delta_x[i] / u.length, rep.delta_x_rel[i],
                           rep.mean_p / u.momentum});
    }

    Meta meta;
    meta_put(meta, "subcommand", "wavepacket");
    meta_put(meta, "framework", a.framework);
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "p0", a.p0);
    meta_put(meta, "sigma_p", a.sigma_p);
    meta_put(meta, "mean_p", a.mean_p);
    meta_put(meta, "mass", a.mass);
    meta_put(meta, "units", a.common.units);
    meta_put(meta, "center", packet.center);
    meta_put(meta, "slope", rep.slope);
    meta_put(meta, "delta_x0", rep.delta_x0);
    std::string norms;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        norms += fmt::format("{}{}", i ? ";" : "", frames[i].grid_norm);
    }
    meta_put(meta, "frame_grid_norms", norms);

    const std::string out = resolve_output(a.common.output);
    if (a.common.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(meta);
        j["density"] = records_json(density);
        j["spreading"] = records_json(spreading);
        gup::write_text(out, j.dump(2) + "\n");
    } else if (out.empty() || out == "-") {
        gup::write_text(out, gup::to_csv(density) + "\n" + gup::to_csv(spreading));
    } else {
        gup::write_text(out + ".density.csv", gup::to_csv(density));
        gup::write_text(out + ".spreading.csv", gup::to_csv(spreading));
    }
}

// ------------------------------------------------------------------ cosmo

struct CosmoArgs {
    CommonOpts common;
    double beta = 1.0;
    double chi = 4.0 * kPi * kPi / 3.0;
    double k = std::numbers::sqrt2;
    double c = 1.0;
    double t_start = 0.05;
    double t_end = 20.0;
    int samples = 200;
    double p0_truncate = 0.0; // 0 = no truncation
};

void run_cosmo(const CosmoArgs& a) {
    gup::CosmoParams params;
    params.beta = a.beta;
    params.chi = a.chi;
    params.c = a.c;
    params.k_offset = a.k;
    if (a.p0_truncate > 0.0) params.p0_truncation = a.p0_truncate;
    if (!(a.t_end > a.t_start)) throw gup::DomainError("cosmo: need --t-end > --t-start");

    // The k-branch exists only after the curvature singularity at
    // t* = (sqrt(2 beta) - k)/A; earlier times are unreachable.
    const double root = std::sqrt(2.0 * params.beta);
    const double t_sing_lo = (-root - a.k) / params.drift_rate();
    const double t_sing_hi = (root - a.k) / params.drift_rate();
    if (a.t_start <= t_sing_hi) {
        throw gup::SingularityError(
            "cosmo: --t-start is at or before the curvature singularity of this branch",
            t_sing_lo, t_sing_hi);
    }

    const double pv0 = gup::pv_closed_form(params, a.t_start);
    std::vector<double> t_query(static_cast<std::size_t>(a.samples));
    for (int i = 0; i < a.samples; ++i) {
        t_query[static_cast<std::size_t>(i)] =
            a.t_start + (a.t_end - a.t_start) * i / (a.samples - 1);
    }
    const gup::CosmoSolution sol = gup::solve_pv(params, pv0, t_query);

    // Locate the past singularity: integrate backward until blow-up.
    const std::vector<double> probe = {a.t_start, t_sing_hi - 1.0};
    const gup::OdeSolution back = gup::solve_ode(
        [&params](double, double pv) { return gup::pv_rhs(params, pv); }, pv0, probe);

    const UnitScales u = unit_scales(a.common, a.beta);
    gup::Table table;
    table.columns = {"t", "p_v", "H", "rho_phi"};
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        table.add_row({sol.t[i], sol.p_v[i] / u.momentum, sol.H[i], sol.rho[i]});
    }

    Meta meta;
    meta_put(meta, "subcommand", "cosmo");
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "chi", a.chi);
    meta_put(meta, "k", a.k);
    meta_put(meta, "c", a.c);
    meta_put(meta, "t_start", a.t_start);
    meta_put(meta, "t_end", a.t_end);
    meta_put(meta, "units", a.common.units);
    meta_put(meta, "truncation_clamped", sol.clamped_any);
    if (a.p0_truncate > 0.0) meta_put(meta, "p0_truncate", a.p0_truncate);
    if (back.blew_up) {
        meta_put(meta, "singularity_bracket_lower", back.blow_up_lower);
        meta_put(meta, "singularity_bracket_upper", back.blow_up_upper);
        if (a.common.format == "csv") {
            fmt::print(stderr, "note: past singularity bracketed in [{}, {}]\n",
                       back.blow_up_lower, back.blow_up_upper);
        }
    }
    emit_table(table, meta, a.common);
}

// ---------------------------------------------------------------- overlap

struct OverlapArgs {
    CommonOpts common;
    double beta = 1.0;
    double p0 = 5.0;
    double sep_max = 0.0; // 0 = four overlap periods
    int n = 161;
};

void run_overlap(const OverlapArgs& a) {
    const gup::TruncatedSpace space(gup::DeformedAlgebra::sqrt_gup(a.beta), a.p0);
    const double sep_max = a.sep_max > 0.0 ? a.sep_max : 4.0 * kPi * gup::kHbar / space.q0();
    const UnitScales u = unit_scales(a.common, a.beta);

    gup::Table table;
    table.columns = {"delta_xi", "overlap"};
    for (int i = 0; i < a.n; ++i) {
        const double dxi = sep_max * i / (a.n - 1);
        table.add_row({dxi / u.length, gup::maxloc_overlap(space, dxi, 0.0).real()});
    }
    Meta meta;
    meta_put(meta, "subcommand", "overlap");
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "p0", a.p0);
    meta_put(meta, "units", a.common.units);
    emit_table(table, meta, a.common);
}

// -------------------------------------------------------------- transform

struct TransformArgs {
    CommonOpts common;
    std::string kind = "full";
    std::string direction = "forward";
    double beta = 1.0;
    double lambda = 1.0;
    double eta = 0.0;
    double xi = 0.0;
    double p0 = 5.0;
    int n_mode = 1;
    std::vector<double> grid;
    double window = 0.0; // 0 = default per kind
};

void run_transform(const TransformArgs& a) {
    const bool full = a.kind == "full";
    const bool forward = a.direction == "forward";
    const UnitScales u = unit_scales(a.common, a.beta);

    std::vector<double> gridv = a.grid;
    if (gridv.empty()) {
        if (full && forward) gridv = {-20.0, 20.0, 201.0};
        else if (full) gridv = {-6.0, 6.0, 201.0};
        else if (forward) gridv = {-15.0, 15.0, 201.0};
        else gridv = {0.0, 0.0, 101.0}; // filled below (interior of [-q0, q0])
    }
    gup::Table table;
    Meta meta;
    meta_put(meta, "subcommand", "transform");
    meta_put(meta, "kind", a.kind);
    meta_put(meta, "direction", a.direction);
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "units", a.common.units);

    if (full) {
        const gup::SqueezedParams sp{gup::DeformedAlgebra::sqrt_gup(a.beta), a.lambda, a.eta,
                                     a.xi};
        const gup::MomentumState state = gup::squeezed_state(sp);
        meta_put(meta, "lambda", a.lambda);
        meta_put(meta, "eta", a.eta);
        meta_put(meta, "xi", a.xi);
        if (forward) {
            const int n = static_cast<int>(gridv[2]);
            std::vector<double> xg(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) xg[i] = gridv[0] + (gridv[1] - gridv[0]) * i / (n - 1);
            const gup::PositionSamples pos = gup::gft_full(state, xg);
            table.columns = {"x", "re", "im", "abs2"};
            for (std::size_t i = 0; i < pos.x.size(); ++i) {
                table.add_row({pos.x[i] / u.length, pos.psi[i].real(), pos.psi[i].imag(),
                               std::norm(pos.psi[i])});
            }
        } else {
            const double window = a.window > 0.0 ? a.window : 40.0;
            const std::size_t n_window = 2049;
            std::vector<double> xw(n_window);
            for (std::size_t i = 0; i < n_window; ++i) {
                xw[i] = -window + 2.0 * window * static_cast<double>(i) / (n_window - 1);
            }
            const gup::PositionSamples pos = gup::gft_full(state, xw);
            const int n = static_cast<int>(gridv[2]);
            std::vector<double> pg(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) pg[i] = gridv[0] + (gridv[1] - gridv[0]) * i / (n - 1);
            const gup::InverseTransformResult inv =
                gup::gft_full_inverse(pos, pg, state.algebra());
            table.columns = {"p", "re", "im", "abs2"};
            for (std::size_t i = 0; i < pg.size(); ++i) {
                table.add_row({pg[i] / u.momentum, inv.psi_p[i].real(), inv.psi_p[i].imag(),
                               std::norm(inv.psi_p[i])});
            }
            meta_put(meta, "window", window);
            meta_put(meta, "tail_estimate", inv.tail.value);
            meta_put(meta, "tail_reliable", inv.tail.reliable);
        }
    } else {
        const gup::TruncatedSpace space(gup::DeformedAlgebra::sqrt_gup(a.beta), a.p0);
        const gup::MomentumState state = gup::max_loc_state(space, a.xi, a.n_mode);
        meta_put(meta, "p0", a.p0);
        meta_put(meta, "xi", a.xi);
        meta_put(meta, "n", a.n_mode);
        if (forward) {
            const int n = static_cast<int>(gridv[2]);
            std::vector<double> xig(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) xig[i] = gridv[0] + (gridv[1] - gridv[0]) * i / (n - 1);
            const gup::QuasiPositionSamples qs = gup::gft_truncated(state, xig);
            table.columns = {"xi", "re", "im", "abs2"};
            for (std::size_t i = 0; i < qs.xi.size(); ++i) {
                table.add_row({qs.xi[i] / u.length, qs.psi[i].real(), qs.psi[i].imag(),
                               std::norm(qs.psi[i])});
            }
        } else {
            const double window = a.window > 0.0 ? a.window : 60.0;
            const std::size_t n_window = 4097;
            std::vector<double> xiw(n_window);
            for (std::size_t i = 0; i < n_window; ++i) {
                xiw[i] = -window + 2.0 * window * static_cast<double>(i) / (n_window - 1);
            }
            const gup::QuasiPositionSamples qs = gup::gft_truncated(state, xiw);
            const int n = static_cast<int>(gridv[2]);
            double lo = gridv[0], hi = gridv[1];
            if (lo == 0.0 && hi == 0.0) {
                hi = 0.95 * space.q0();
                lo = -hi;
            }
            std::vector<double> qg(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) qg[i] = lo + (hi - lo) * i / (n - 1);
            const gup::TruncatedInverseResult inv = gup::gft_truncated_inverse(qs, qg, space);
            table.columns = {"q", "re", "im", "abs2"};
            for (std::size_t i = 0; i < qg.size(); ++i) {
                table.add_row({qg[i] / u.momentum, inv.psi_q[i].real(), inv.psi_q[i].imag(),
                               std::norm(inv.psi_q[i])});
            }
            meta_put(meta, "window", window);
            meta_put(meta, "tail_estimate", inv.tail_estimate);
        }
    }
    emit_table(table, meta, a.common);
}

// ------------------------------------------------------------- dispersion

struct DispersionArgs {
    CommonOpts common;
    std::string framework = "full";
    double beta = 1.0;
    double mass = 1.0;
    double k_min = 0.0;
    double k_max = 0.0; // 0 = default (3, or the truncated band edge)
    int n = 121;
    double p0 = 5.0;
};

void run_dispersion(const DispersionArgs& a) {
    const gup::Framework fw = parse_framework(a.framework);
    double k_max = a.k_max;
    if (k_max == 0.0) {
        if (fw == gup::Framework::CompactGUP) {
            k_max = gup::DeformedAlgebra::sqrt_gup(a.beta).z(a.p0) / gup::kHbar;
        } else {
            k_max = 3.0;
        }
    }
    std::vector<double> k_grid(static_cast<std::size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
        k_grid[static_cast<std::size_t>(i)] = a.k_min + (k_max - a.k_min) * i / (a.n - 1);
    }
    const gup::DispersionTable disp =
        gup::dispersion(fw, a.beta, a.mass, k_grid,
                        fw == gup::Framework::CompactGUP ? std::optional<double>(a.p0)
                                                         : std::nullopt);
    const UnitScales u = unit_scales(a.common, a.beta, a.mass);
    gup::Table table;
    table.columns = {"k", "omega", "omega_prime", "omega_second"};
    for (std::size_t i = 0; i < disp.k.size(); ++i) {
        table.add_row({disp.k[i] * u.length, disp.omega[i] * u.time,
                       disp.omega_prime[i] * u.time / u.length,
                       disp.omega_second[i] * u.time / (u.length * u.length)});
    }
    Meta meta;
    meta_put(meta, "subcommand", "dispersion");
    meta_put(meta, "framework", a.framework);
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "mass", a.mass);
    meta_put(meta, "units", a.common.units);
    if (fw == gup::Framework::CompactGUP) {
        meta_put(meta, "p0", a.p0);
        meta_put(meta, "k_band_edge", gup::DeformedAlgebra::sqrt_gup(a.beta).z(a.p0) / gup::kHbar);
    }
    emit_table(table, meta, a.common);
}

// ------------------------------------------------------------- verify-gup

struct VerifyArgs {
    CommonOpts common;
    std::string state = "squeezed";
    double beta = 1.0;
    double lambda = 1.0;
    double eta = 0.0;
    double xi = 0.0;
    double p0 = 5.0;
    int n = 1;
    double sigma_p = 1.0;
    double mean_p = 1.0;
    double mass = 1.0;
};

void run_verify(const VerifyArgs& a) {
    std::optional<gup::MomentumState> state;
    if (a.state == "squeezed") {
        state = gup::squeezed_state(
            {gup::DeformedAlgebra::sqrt_gup(a.beta), a.lambda, a.eta, a.xi});
    } else if (a.state == "maxloc") {
        state = gup::max_loc_state(
            gup::TruncatedSpace(gup::DeformedAlgebra::sqrt_gup(a.beta), a.p0), a.xi, a.n);
    } else if (a.state == "kmm-maxloc") {
        state = gup::kmm_max_loc_state(a.beta, a.xi);
    } else { // gaussian
        gup::WavePacketSpec spec;
        spec.framework = gup::Framework::StandardQM;
        spec.sigma_p = a.sigma_p;
        spec.mass = a.mass;
        spec.target_mean_p = a.mean_p;
        state = gup::build_packet(spec).state;
    }
    const gup::UncertaintyReport rep = gup::verify_gup(*state);
    const UnitScales u = unit_scales(a.common, a.beta, a.mass);

    gup::Table table;
    table.columns = {"delta_x", "delta_p", "exp_f", "exp_x", "exp_p", "gup_slack"};
    table.add_row({rep.delta_x / u.length, rep.delta_p / u.momentum, rep.exp_f,
                   rep.exp_x / u.length, rep.exp_p / u.momentum,
                   rep.gup_slack / (u.length * u.momentum)});
    Meta meta;
    meta_put(meta, "subcommand", "verify-gup");
    meta_put(meta, "state", a.state);
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "units", a.common.units);
    emit_table(table, meta, a.common);
}

// ----------------------------------------------------------- series-bounds

struct SeriesArgs {
    CommonOpts common;
    double beta = 1.0;
};

void run_series(const SeriesArgs& a) {
    const double p0 = 1.0 / std::sqrt(2.0 * a.beta);
    const gup::TruncatedSpace space(gup::DeformedAlgebra::sqrt_gup(a.beta), p0);
    const gup::SeriesBounds sb = gup::series_bounds(space);
    const UnitScales u = unit_scales(a.common, a.beta);

    gup::Table table;
    table.columns = {"lower_bound", "delta_x_min", "ratio"};
    table.add_row({sb.lower_bound / u.length, sb.delta_x_min / u.length, sb.ratio});
    Meta meta;
    meta_put(meta, "subcommand", "series-bounds");
    meta_put(meta, "beta", a.beta);
    meta_put(meta, "p0", p0);
    meta_put(meta, "units", a.common.units);
    emit_table(table, meta, a.common);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the sqrt-deformed uncertainty algebra"};
    app.require_subcommand(1);

    SurfaceArgs surface;
    auto* sub_surface = app.add_subcommand(
        "surface", "delta-x surface over the squeezing parameters (lambda, eta)");
    add_common(sub_surface, surface.common);
    sub_surface->add_option("--beta", surface.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_surface->add_option("--lambda-min", surface.lambda_min)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_surface->add_option("--lambda-max", surface.lambda_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_surface->add_option("--eta-min", surface.eta_min)->capture_default_str();
    sub_surface->add_option("--eta-max", surface.eta_max)->capture_default_str();
    sub_surface->add_option("--n-lambda", surface.n_lambda)->check(CLI::Range(2, 10000))
        ->capture_default_str();
    sub_surface->add_option("--n-eta", surface.n_eta)->check(CLI::Range(2, 10000))
        ->capture_default_str();
    sub_surface->callback([&surface] { run_surface(surface); });

    MaxlocArgs maxloc;
    auto* sub_maxloc =
        app.add_subcommand("maxloc", "maximally localized state of the truncated theory");
    add_common(sub_maxloc, maxloc.common);
    sub_maxloc->add_option("--beta", maxloc.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_maxloc->add_option("--p0", maxloc.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_maxloc->add_option("--xi", maxloc.xi)->capture_default_str();
    sub_maxloc->add_option("--n", maxloc.n)->check(CLI::Range(1, 64))->capture_default_str();
    sub_maxloc->add_option("--samples", maxloc.samples)->check(CLI::Range(2, 100000))
        ->capture_default_str();
    sub_maxloc->add_option("--scan", maxloc.scan, "random superpositions to scan")
        ->check(CLI::Range(0, 100000))->capture_default_str();
    sub_maxloc->add_option("--seed", maxloc.seed)->capture_default_str();
    sub_maxloc->callback([&maxloc] { run_maxloc(maxloc); });

    WavepacketArgs wavepacket;
    auto* sub_wavepacket =
        app.add_subcommand("wavepacket", "free packet evolution: density frames + spreading");
    add_common(sub_wavepacket, wavepacket.common);
    sub_wavepacket->add_option("--framework", wavepacket.framework)
        ->check(CLI::IsMember({"standard", "full", "compact"}))->capture_default_str();
    sub_wavepacket->add_option("--beta", wavepacket.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_wavepacket->add_option("--p0", wavepacket.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_wavepacket->add_option("--sigma-p", wavepacket.sigma_p)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_wavepacket->add_option("--mean-p", wavepacket.mean_p)->capture_default_str();
    sub_wavepacket->add_option("--mass", wavepacket.mass)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_wavepacket->add_option("--times", wavepacket.times, "frame times (default 0..5)");
    sub_wavepacket->add_option("--grid", wavepacket.grid, "x grid: min max n")->expected(3);
    sub_wavepacket->add_option("--spreading-n", wavepacket.spreading_n)
        ->check(CLI::Range(2, 100000))->capture_default_str();
    sub_wavepacket->callback([&wavepacket] { run_wavepacket(wavepacket); });

    CosmoArgs cosmo;
    auto* sub_cosmo =
        app.add_subcommand("cosmo", "minisuperspace trajectory p_v(t), H, rho_phi");
    add_common(sub_cosmo, cosmo.common);
    sub_cosmo->add_option("--beta", cosmo.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_cosmo->add_option("--chi", cosmo.chi)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_cosmo->add_option("--k", cosmo.k, "closed-form integration constant")
        ->capture_default_str();
    sub_cosmo->add_option("--c", cosmo.c)->check(CLI::PositiveNumber)->capture_default_str();
    sub_cosmo->add_option("--t-start", cosmo.t_start)->capture_default_str();
    sub_cosmo->add_option("--t-end", cosmo.t_end)->capture_default_str();
    sub_cosmo->add_option("--samples", cosmo.samples)->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    sub_cosmo->add_option("--p0-truncate", cosmo.p0_truncate)->check(CLI::PositiveNumber);
    sub_cosmo->callback([&cosmo] { run_cosmo(cosmo); });

    OverlapArgs overlap;
    auto* sub_overlap =
        app.add_subcommand("overlap", "localized-state overlap vs separation (closed form)");
    add_common(sub_overlap, overlap.common);
    sub_overlap->add_option("--beta", overlap.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_overlap->add_option("--p0", overlap.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_overlap->add_option("--sep-max", overlap.sep_max)->capture_default_str();
    sub_overlap->add_option("--n", overlap.n)->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    sub_overlap->callback([&overlap] { run_overlap(overlap); });

    TransformArgs transform;
    auto* sub_transform =
        app.add_subcommand("transform", "generalized Fourier transform, forward or inverse");
    add_common(sub_transform, transform.common);
    sub_transform->add_option("--kind", transform.kind)
        ->check(CLI::IsMember({"full", "truncated"}))->capture_default_str();
    sub_transform->add_option("--direction", transform.direction)
        ->check(CLI::IsMember({"forward", "inverse"}))->capture_default_str();
    sub_transform->add_option("--beta", transform.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_transform->add_option("--lambda", transform.lambda)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_transform->add_option("--eta", transform.eta)->capture_default_str();
    sub_transform->add_option("--xi", transform.xi)->capture_default_str();
    sub_transform->add_option("--p0", transform.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_transform->add_option("--n", transform.n_mode)->check(CLI::Range(1, 64))
        ->capture_default_str();
    sub_transform->add_option("--grid", transform.grid, "output grid: min max n")->expected(3);
    sub_transform->add_option("--window", transform.window, "inverse window half-width");
    sub_transform->callback([&transform] { run_transform(transform); });

    DispersionArgs dispersion;
    auto* sub_dispersion = app.add_subcommand("dispersion", "omega(k) and its derivatives");
    add_common(sub_dispersion, dispersion.common);
    sub_dispersion->add_option("--framework", dispersion.framework)
        ->check(CLI::IsMember({"standard", "full", "compact"}))->capture_default_str();
    sub_dispersion->add_option("--beta", dispersion.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_dispersion->add_option("--mass", dispersion.mass)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_dispersion->add_option("--k-min", dispersion.k_min)->capture_default_str();
    sub_dispersion->add_option("--k-max", dispersion.k_max)->capture_default_str();
    sub_dispersion->add_option("--n", dispersion.n)->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    sub_dispersion->add_option("--p0", dispersion.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_dispersion->callback([&dispersion] { run_dispersion(dispersion); });

    VerifyArgs verify;
    auto* sub_verify =
        app.add_subcommand("verify-gup", "uncertainty report for a built-in state");
    add_common(sub_verify, verify.common);
    sub_verify->add_option("--state", verify.state)
        ->check(CLI::IsMember({"squeezed", "maxloc", "kmm-maxloc", "gaussian"}))
        ->capture_default_str();
    sub_verify->add_option("--beta", verify.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_verify->add_option("--lambda", verify.lambda)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_verify->add_option("--eta", verify.eta)->capture_default_str();
    sub_verify->add_option("--xi", verify.xi)->capture_default_str();
    sub_verify->add_option("--p0", verify.p0)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_verify->add_option("--n", verify.n)->check(CLI::Range(1, 64))->capture_default_str();
    sub_verify->add_option("--sigma-p", verify.sigma_p)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_verify->add_option("--mean-p", verify.mean_p)->capture_default_str();
    sub_verify->add_option("--mass", verify.mass)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_verify->callback([&verify] { run_verify(verify); });

    SeriesArgs series;
    auto* sub_series = app.add_subcommand(
        "series-bounds", "series lower bound vs attained minimal delta-x at p0 = 1/sqrt(2 beta)");
    add_common(sub_series, series.common);
    sub_series->add_option("--beta", series.beta)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_series->callback([&series] { run_series(series); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const gup::SingularityError& e) {
        fmt::print(stderr, "error: {} (bracket [{}, {}])\n", e.what(), e.bracket_lo,
                   e.bracket_hi);
        return 1;
    } catch (const gup::DomainError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
