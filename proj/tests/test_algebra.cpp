#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "gup/algebra.hpp"
#include "gup/errors.hpp"

using namespace gup;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

} // namespace

TEST_CASE("standard algebra is the identity deformation") {
    const auto alg = DeformedAlgebra::standard();
    for (double p : {-7.5, -1.0, 0.0, 0.3, 42.0}) {
        CHECK(alg.f(p) == 1.0);
        CHECK(alg.z(p) == p);
        CHECK(alg.u(p) == doctest::Approx(0.5 * p * p).epsilon(1e-14));
        CHECK(alg.measure_weight(p) == 1.0);
        CHECK(alg.z_inverse(alg.z(p)) == p);
    }
    CHECK(std::isinf(alg.z_limit()));
}

TEST_CASE("sqrt algebra closed forms at pinned points") {
    // Reference values from 30-digit arithmetic:
    //   z(p) = asinh(sqrt(2 b) p)/sqrt(2 b),  u(p) = (sqrt(1 + 2 b p^2) - 1)/(2 b)
    const auto a_half = DeformedAlgebra::sqrt_gup(0.5);
    CHECK(rel_err(a_half.z(1.0), 0.88137358701954303) < 1e-15);
    CHECK(rel_err(a_half.u(1.0), 0.41421356237309505) < 1e-15);
    CHECK(rel_err(a_half.f(1.0), std::sqrt(2.0)) < 1e-15);

    const auto a_one = DeformedAlgebra::sqrt_gup(1.0);
    CHECK(rel_err(a_one.z(2.0), 1.2464504802804610) < 1e-15);
    CHECK(rel_err(a_one.u(2.0), 1.0) < 1e-15);
    CHECK(rel_err(a_one.f(2.0), 3.0) < 1e-15);
    CHECK(std::isinf(a_one.z_limit()));
}

TEST_CASE("kmm algebra closed forms at pinned points") {
    //   z(p) = atan(sqrt(b) p)/sqrt(b),  u(p) = log(1 + b p^2)/(2 b)
    const auto alg = DeformedAlgebra::kmm(2.0);
    CHECK(rel_err(alg.z(1.0), 0.67551085885603996) < 1e-15);
    CHECK(rel_err(alg.u(1.0), 0.27465307216702742) < 1e-15);
    CHECK(rel_err(alg.f(1.0), 3.0) < 1e-15);
    CHECK(rel_err(alg.z_limit(), 0.5 * std::numbers::pi / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("parity: z odd, u and f even") {
    for (auto alg : {DeformedAlgebra::sqrt_gup(0.7), DeformedAlgebra::kmm(1.3)}) {
        for (double p : {0.1, 1.0, 3.7, 25.0}) {
            CHECK(alg.z(-p) == -alg.z(p));
            CHECK(alg.u(-p) == alg.u(p));
            CHECK(alg.f(-p) == alg.f(p));
        }
        CHECK(alg.z(0.0) == 0.0);
        CHECK(alg.u(0.0) == 0.0);
        CHECK(alg.f(0.0) == 1.0);
    }
}

TEST_CASE("z and u agree with direct quadrature of their integrands") {
    // Independent check of the closed forms: 64-panel Simpson of 1/f and p/f.
    for (auto alg : {DeformedAlgebra::sqrt_gup(1.0), DeformedAlgebra::sqrt_gup(0.25),
                     DeformedAlgebra::kmm(0.5)}) {
        for (double p : {0.4, 1.0, 2.5}) {
            const int n = 4096;
            const double h = p / n;
            double sz = 0.0, su = 0.0;
            for (int i = 0; i < n; ++i) {
                auto term = [&](double q) { return 1.0 / alg.f(q); };
                const double a = i * h, m = a + 0.5 * h, b = a + h;
                sz += (term(a) + 4.0 * term(m) + term(b)) * h / 6.0;
                su += (a * term(a) + 4.0 * m * term(m) + b * term(b)) * h / 6.0;
            }
            CHECK(rel_err(alg.z(p), sz) < 1e-12);
            CHECK(rel_err(alg.u(p), su) < 1e-12);
        }
    }
}

TEST_CASE("z_inverse round trips over a wide dynamic range") {
    const auto sq = DeformedAlgebra::sqrt_gup(1.0);
    for (double p : {1e-8, 1e-3, 0.5, 1.0, 10.0, 1e4, 1e8}) {
        const double back = sq.z_inverse(sq.z(p));
        CHECK(rel_err(back, p) < 1e-12);
        CHECK(rel_err(sq.z_inverse(sq.z(-p)), -p) < 1e-12);
    }
    const auto km = DeformedAlgebra::kmm(0.8);
    for (double p : {1e-6, 0.3, 2.0, 50.0}) {
        CHECK(rel_err(km.z_inverse(km.z(p)), p) < 1e-10);
    }
}

TEST_CASE("small and huge argument stability") {
    const auto sq = DeformedAlgebra::sqrt_gup(1.0);
    // Near zero both antiderivatives reduce to their flat limits without
    // cancellation: z ~ p, u ~ p^2/2.
    CHECK(rel_err(sq.z(1e-9), 1e-9) < 1e-12);
    CHECK(rel_err(sq.u(1e-9), 0.5e-18) < 1e-9);
    // Far out z grows like log(2 sqrt(2 b) p)/sqrt(2 b) and u like p/sqrt(2 b);
    // no overflow or NaN anywhere up to the largest finite doubles.
    for (double p : {1e12, 1e154, 1e200, 1e300}) {
        CHECK(std::isfinite(sq.z(p)));
        CHECK(std::isfinite(sq.u(p)));
        CHECK(sq.u(p) > 0.0);
    }
    const double s = std::sqrt(2.0);
    CHECK(rel_err(sq.z(1e200), (std::log(2.0 * s) + 200.0 * std::log(10.0)) / s) < 1e-12);
    CHECK(rel_err(sq.u(1e200), 1e200 / s) < 1e-12);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(DeformedAlgebra::sqrt_gup(0.0), DomainError);
    CHECK_THROWS_AS(DeformedAlgebra::sqrt_gup(-1.0), DomainError);
    CHECK_THROWS_AS(DeformedAlgebra::kmm(-0.5), DomainError);
    const auto sq = DeformedAlgebra::sqrt_gup(1.0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sq.z(nan), DomainError);
    CHECK_THROWS_AS(sq.u(nan), DomainError);
    CHECK_THROWS_AS(sq.f(nan), DomainError);
    const auto km = DeformedAlgebra::kmm(1.0);
    // KMM flattened coordinate is bounded; inverting past the bound is an error.
    CHECK_THROWS_AS(km.z_inverse(km.z_limit() * 1.01), DomainError);
    CHECK_THROWS_AS(km.z_inverse(-km.z_limit() * 1.01), DomainError);
}

TEST_CASE("derivative identities dz/dp = 1/f and du/dp = p/f") {
    for (auto alg : {DeformedAlgebra::sqrt_gup(1.0), DeformedAlgebra::kmm(0.6)}) {
        for (double p : {0.2, 1.1, 3.0}) {
            const double h = 1e-6;
            const double dz = (alg.z(p + h) - alg.z(p - h)) / (2.0 * h);
            const double du = (alg.u(p + h) - alg.u(p - h)) / (2.0 * h);
            CHECK(rel_err(dz, 1.0 / alg.f(p)) < 1e-8);
            CHECK(rel_err(du, p / alg.f(p)) < 1e-8);
        }
    }
}

TEST_CASE("compact support maps the cut-off through z") {
    const auto sq = DeformedAlgebra::sqrt_gup(1.0);
    const CompactSupport cs(sq, 5.0);
    CHECK(cs.p0 == 5.0);
    CHECK(rel_err(cs.q0, std::asinh(std::sqrt(2.0) * 5.0) / std::sqrt(2.0)) < 1e-15);
    CHECK(cs.alpha_minus == -cs.q0);
    CHECK(cs.alpha_plus == cs.q0);
    CHECK_THROWS_AS(CompactSupport(sq, 0.0), DomainError);
    CHECK_THROWS_AS(CompactSupport(sq, -2.0), DomainError);
}

TEST_CASE("presentation units") {
    CHECK(PhysicalUnits::length_unit(4.0) == 2.0);
    CHECK(PhysicalUnits::momentum_unit(4.0) == 0.5);
    CHECK(PhysicalUnits::packet_time_unit(4.0, 3.0) == 12.0);
    CHECK(rel_err(PhysicalUnits::cosmo_time_unit(4.0, 2.0, 5.0), 0.2) < 1e-15);
}

TEST_CASE("kind names") {
    CHECK(to_string(AlgebraKind::Standard) == "standard");
    CHECK(to_string(AlgebraKind::SqrtGUP) == "sqrt-gup");
    CHECK(to_string(AlgebraKind::KMM) == "kmm");
}
