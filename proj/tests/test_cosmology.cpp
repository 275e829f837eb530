#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gup/cosmology.hpp"
#include "gup/errors.hpp"

using namespace gup;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}

} // namespace

TEST_CASE("drift rate and right-hand side") {
    CosmoParams def; // chi = 4 pi^2 / 3 makes A = c = 1
    CHECK(rel_err(def.drift_rate(), 1.0) < 1e-12);

    CosmoParams unit;
    unit.chi = 1.0;
    CHECK(rel_err(unit.drift_rate(), 0.075990887731753329) < 1e-14);
    // A p^2 sqrt(1 + 2 b p^2) at p = 1: 3 sqrt(3) / (4 pi^2), 25-digit pin.
    CHECK(rel_err(pv_rhs(unit, 1.0), 0.13162007846365924) < 1e-14);
    CHECK(pv_rhs(unit, -1.0) == pv_rhs(unit, 1.0)); // even in p
}

TEST_CASE("closed-form trajectory at pinned times") {
    CosmoParams params;
    CHECK(rel_err(pv_closed_form(params, 0.05), -2.635951277356177) < 1e-13);
    CHECK(rel_err(pv_closed_form(params, 1.0), -0.51108108452939387) < 1e-14);
    CHECK(rel_err(pv_closed_form(params, 20.0), -0.04680012438286635) < 1e-14);
    // The branch ends at t* = (sqrt(2 beta) - k)/A; past it the closed form
    // has no real value. With beta = 0.5, k = 2 the boundary t* = -1 is
    // exactly representable, so the boundary itself must throw too.
    CHECK_THROWS_AS(pv_closed_form(params, -0.5), DomainError);
    CosmoParams exact;
    exact.beta = 0.5;
    exact.k_offset = 2.0;
    CHECK_THROWS_AS(pv_closed_form(exact, -1.0), DomainError);
    CHECK_THROWS_AS(pv_closed_form(exact, -1.5), DomainError);
    CHECK(std::isfinite(pv_closed_form(exact, -0.9)));
}

TEST_CASE("closed form satisfies the drift equation") {
    CosmoParams params;
    params.beta = 0.7;
    params.chi = 2.2;
    params.k_offset = 2.0;
    for (double t : {0.3, 1.0, 4.0}) {
        const double h = 1e-6;
        const double dpdt =
            (pv_closed_form(params, t + h) - pv_closed_form(params, t - h)) / (2.0 * h);
        CHECK(rel_err(dpdt, pv_rhs(params, pv_closed_form(params, t))) < 1e-8);
    }
}

TEST_CASE("adaptive integration reproduces the closed form over the full range") {
    CosmoParams params;
    std::vector<double> ts;
    for (int i = 0; i <= 100; ++i) ts.push_back(0.05 + (20.0 - 0.05) * i / 100.0);
    auto sol = solve_pv(params, pv_closed_form(params, ts.front()), ts);
    REQUIRE(sol.t.size() == ts.size());
    CHECK(!sol.clamped_any);
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        worst = std::max(worst, rel_err(sol.p_v[i], pv_closed_form(params, ts[i])));
        // Columns are consistent with the state.
        CHECK(rel_err(sol.H[i], hubble_of_pv(params, sol.p_v[i]).H) < 1e-14);
        CHECK(rel_err(sol.rho[i], rho_phi(params, sol.p_v[i])) < 1e-14);
    }
    CHECK(worst < 1e-7);
}

TEST_CASE("friedmann constraint holds identically") {
    CosmoParams params;
    params.beta = 0.35;
    params.chi = 5.0;
    params.c = 1.7;
    for (double pv : {0.01, 0.3, 1.0, 5.0, 50.0}) {
        auto fc = friedmann_check(params, pv);
        CHECK(rel_err(fc.h2, fc.density_side) < 1e-12);
        CHECK(rel_err(fc.rho, 1.5 * params.chi * pv * pv) < 1e-14);
        CHECK(rel_err(fc.rho_max, 0.75 * params.chi / params.beta) < 1e-14);
    }
}

TEST_CASE("hubble truncation clamps at the cut-off") {
    CosmoParams params;
    params.p0_truncation = 1.0;
    auto below = hubble_of_pv(params, 0.5);
    CHECK(!below.clamped);
    auto above = hubble_of_pv(params, 3.0);
    CHECK(above.clamped);
    CHECK(above.H == hubble_of_pv(params, 1.0).H);
    CHECK(rel_err(above.H, 0.57735026918962576) < 1e-14); // (1/3) sqrt(3) at p = 1
    // Untruncated rate keeps growing.
    CosmoParams free = params;
    free.p0_truncation.reset();
    CHECK(hubble_of_pv(free, 3.0).H > above.H);
}

TEST_CASE("truncated run caps the expansion rate at H(p0)") {
    CosmoParams params;
    params.p0_truncation = 1.0;
    std::vector<double> ts;
    for (int i = 0; i <= 80; ++i) ts.push_back(0.05 + (10.0 - 0.05) * i / 80.0);
    auto sol = solve_pv(params, pv_closed_form(params, ts.front()), ts);
    CHECK(sol.clamped_any);
    const double cap = hubble_of_pv(params, 1.0).H;
    double max_h = 0.0;
    for (double h : sol.H) max_h = std::max(max_h, h);
    CHECK(max_h <= cap + 1e-14);
    CHECK(max_h == cap); // the early samples have |p_v| > p0 and sit exactly on the cap
}

TEST_CASE("backward integration runs into the curvature singularity") {
    CosmoParams params;
    const double pv0 = pv_closed_form(params, 1.0);
    std::vector<double> ts{1.0, 0.5, -1.0};
    try {
        solve_pv(params, pv0, ts);
        FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
        // The blow-up is at t = 0 for the default parameters.
        CHECK(e.bracket_lo <= 1e-6);
        CHECK(e.bracket_hi >= -1e-6);
        CHECK(std::fabs(e.bracket_hi - e.bracket_lo) < 0.2);
    }
}

TEST_CASE("parameter validation") {
    CosmoParams bad;
    bad.beta = 0.0;
    CHECK_THROWS_AS(pv_rhs(bad, 1.0), DomainError);
    bad = CosmoParams{};
    bad.chi = -1.0;
    CHECK_THROWS_AS(rho_phi(bad, 1.0), DomainError);
    bad = CosmoParams{};
    bad.c = 0.0;
    CHECK_THROWS_AS(hubble_of_pv(bad, 1.0), DomainError);
    bad = CosmoParams{};
    bad.p0_truncation = -2.0;
    CHECK_THROWS_AS(hubble_of_pv(bad, 1.0), DomainError);
    CosmoParams ok;
    std::vector<double> one{0.0};
    CHECK_THROWS_AS(solve_pv(ok, 1.0, one), DomainError);
}
