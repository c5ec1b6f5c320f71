// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "steklov/errors.hpp"
#include "steklov/oracles.hpp"
#include "steklov/spaceform.hpp"

using namespace steklov;
using spaceform::ThetaProfile;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

TEST_CASE("sk_eval branches") {
    auto flat = spaceform::sk_eval(0.0, 2.0);
    CHECK(flat.s == 2.0);
    CHECK(flat.s_prime == 1.0);

    auto sphere = spaceform::sk_eval(1.0, pi / 2);
    CHECK(std::abs(sphere.s - 1.0) < 1e-15);
    CHECK(std::abs(sphere.s_prime) < 1e-15);

    auto hyp = spaceform::sk_eval(-1.0, 1.0);
    CHECK(std::abs(hyp.s - oracles::sinh_series(1.0)) < 1e-15);
    CHECK(std::abs(hyp.s_prime - oracles::cosh_series(1.0)) < 1e-15);
    CHECK(hyp.s == Approx(1.1752012).epsilon(1e-7));
    CHECK(hyp.s_prime == Approx(1.5430806).epsilon(1e-7));
}

TEST_CASE("sk_eval curvature scaling s_K(r) = s_{K t^2}(r / t) * t") {
    for (double K : {-2.0, -0.3, 0.7, 3.0}) {
        for (double r : {0.1, 0.5, 0.9}) {
            const double t = 1.7;
            CHECK(spaceform::sk_eval(K, r).s ==
                  Approx(t * spaceform::sk_eval(K * t * t, r / t).s).epsilon(1e-14));
        }
    }
}

TEST_CASE("sk_eval is relatively continuous in K at 0") {
    for (double r : {0.0, 0.3, 1.0, 4.0, 10.0}) {
        const double flat = spaceform::sk_eval(0.0, r).s;
        for (double K : {1e-14, -1e-14}) {
            CHECK(std::abs(spaceform::sk_eval(K, r).s - flat) <= 1e-12 * std::max(1.0, flat));
            CHECK(std::abs(spaceform::sk_eval(K, r).s_prime - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("theta_eval examples") {
    CHECK(spaceform::theta_eval(ThetaProfile(2, 0.0, 1.0), 0.5) == Approx(0.5).epsilon(1e-15));
    for (int n = 2; n <= 6; ++n) {
        for (double K : {-2.0, 0.0, 1.5}) {
            for (double H : {-1.0, 0.0, 3.0}) CHECK(spaceform::theta_eval(ThetaProfile(n, K, H), 0.0) == 1.0);
        }
    }
    const double v = spaceform::theta_eval(ThetaProfile(3, -1.0, 1.0), 1.0);
    CHECK(std::abs(v - std::exp(-2.0)) < 1e-15);
    const double direct = std::pow(std::cosh(1.0) - std::sinh(1.0), 2);
    CHECK(std::abs(v - direct) < 1e-14);
}

TEST_CASE("theta_eval stays accurate far out when H = sqrt(-K)") {
    const ThetaProfile p(2, -1.0, 1.0);
    CHECK(spaceform::theta_eval(p, 100.0) == Approx(std::exp(-100.0)).epsilon(1e-13));
    const ThetaProfile q(4, -4.0, 2.0);
    CHECK(spaceform::theta_eval(q, 30.0) == Approx(std::exp(-180.0)).epsilon(1e-12));
}

TEST_CASE("ThetaProfile validation") {
    CHECK_THROWS_AS(ThetaProfile(1, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(ThetaProfile(2, NAN, 1.0), ValidationError);
    CHECK_THROWS_AS(ThetaProfile(2, 0.0, INFINITY), ValidationError);
}

TEST_CASE("theta_first_zero examples") {
    CHECK(spaceform::theta_first_zero(ThetaProfile(2, 0.0, 2.0)) == 0.5);
    CHECK(std::abs(spaceform::theta_first_zero(ThetaProfile(2, 1.0, 0.0)) - pi / 2) < 1e-15);
    const double hyp = spaceform::theta_first_zero(ThetaProfile(2, -1.0, 2.0));
    const double ref = oracles::bisect([](double r) { return std::cosh(r) - 2 * std::sinh(r); }, 0.0, 5.0);
    CHECK(std::abs(hyp - ref) < 1e-12);
    CHECK(hyp == Approx(0.5493061).epsilon(1e-7));
}

TEST_CASE("theta_first_zero infinite regimes") {
    CHECK(std::isinf(spaceform::theta_first_zero(ThetaProfile(3, 0.0, 0.0))));
    CHECK(std::isinf(spaceform::theta_first_zero(ThetaProfile(3, 0.0, -1.0))));
    CHECK(std::isinf(spaceform::theta_first_zero(ThetaProfile(3, -1.0, 1.0))));
    CHECK(std::isinf(spaceform::theta_first_zero(ThetaProfile(3, -4.0, 1.5))));
    CHECK(std::isfinite(spaceform::theta_first_zero(ThetaProfile(3, 1.0, -50.0))));
}

TEST_CASE("theta_first_zero against bisection for K > 0") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> k(0.01, 9.0), h(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double K = k(rng), H = h(rng);
        const double a = std::sqrt(K);
        const double ref = oracles::bisect([&](double r) { return std::cos(a * r) - H * std::sin(a * r) / a; }, 0.0,
                                           pi / a * (1 - 1e-15));
        CHECK(std::abs(spaceform::theta_first_zero(ThetaProfile(2, K, H)) - ref) < 1e-12);
    }
}

TEST_CASE("theta_integral examples") {
    CHECK(spaceform::theta_integral(ThetaProfile(2, 0.0, 1.0), 1.0) == Approx(0.5).epsilon(1e-15));
    for (int n = 2; n <= 7; ++n) CHECK(spaceform::theta_integral(ThetaProfile(n, 0.0, 0.0), 1.3) == 1.3);
    const double hemi = spaceform::theta_integral(ThetaProfile(2, 1.0, 0.0), pi / 2);
    CHECK(std::abs(hemi - 1.0) < 1e-12);
    CHECK(std::abs(hemi - oracles::simpson([](double r) { return std::cos(r); }, 0.0, pi / 2)) < 1e-12);
}

TEST_CASE("theta_integral matches Simpson for curved profiles") {
    for (int n = 2; n <= 5; ++n) {
        for (auto [K, H] : {std::pair{1.0, 0.5}, {-1.0, 1.3}, {-0.5, -2.0}, {2.0, -1.0}}) {
            const ThetaProfile p(n, K, H);
            const double R = std::min(1.0, spaceform::theta_first_zero(p));
            const double ref = oracles::simpson([&](double r) { return spaceform::theta_eval(p, r); }, 0.0, R);
            CHECK(std::abs(spaceform::theta_integral(p, R) - ref) < 1e-11);
        }
    }
}

TEST_CASE("theta_integral rejects R beyond the first zero") {
    CHECK_THROWS_AS(spaceform::theta_integral(ThetaProfile(2, 0.0, 2.0), 1.0), PreconditionError);
    CHECK_THROWS_AS(spaceform::theta_integral(ThetaProfile(2, 1.0, 0.0), 2.0), PreconditionError);
    CHECK_THROWS_AS(spaceform::theta_integral(ThetaProfile(2, 0.0, 0.0), -1.0), PreconditionError);
    CHECK_NOTHROW(spaceform::theta_integral(ThetaProfile(2, 0.0, 2.0), 0.5));
}

TEST_CASE("ball_geometry examples") {
    auto disk = spaceform::ball_geometry(2, 0.0, 1.0);
    CHECK(disk.volume == Approx(pi).epsilon(1e-15));
    CHECK(disk.boundary_area == Approx(2 * pi).epsilon(1e-15));
    CHECK(disk.mean_curvature == Approx(1.0).epsilon(1e-15));
    CHECK(disk.isoperimetric_ratio() == Approx(2.0).epsilon(1e-15));

    auto ball = spaceform::ball_geometry(3, 0.0, 2.0);
    CHECK(ball.volume == Approx(32 * pi / 3).epsilon(1e-14));
    CHECK(ball.boundary_area == Approx(16 * pi).epsilon(1e-14));
    CHECK(ball.isoperimetric_ratio() == Approx(1.5).epsilon(1e-14));

    auto hemi = spaceform::ball_geometry(2, 1.0, pi / 2);
    CHECK(hemi.volume == Approx(2 * pi * (1 - std::cos(pi / 2))).epsilon(1e-14));
    CHECK(hemi.boundary_area == Approx(2 * pi).epsilon(1e-14));
    CHECK(hemi.isoperimetric_ratio() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ball_geometry matches Simpson volumes in every dimension") {
    for (int n = 2; n <= 7; ++n) {
        for (double K : {-1.0, 0.0, 1.0, 2.5}) {
            for (double R : {0.01, 0.4, 1.1}) {
                const double vol = oracles::sphere_area_recursive(n - 1) *
                                   oracles::simpson([&](double t) { return std::pow(spaceform::sk_eval(K, t).s, n - 1); },
                                                    0.0, R);
                CHECK(spaceform::ball_geometry(n, K, R).volume == Approx(vol).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("ball_geometry domain errors") {
    CHECK_THROWS_AS(spaceform::ball_geometry(2, 1.0, pi), DomainError);
    CHECK_THROWS_AS(spaceform::ball_geometry(2, 4.0, 2.0), DomainError);
    CHECK_THROWS_AS(spaceform::ball_geometry(2, 0.0, 0.0), DomainError);
    CHECK_NOTHROW(spaceform::ball_geometry(2, 1.0, 3.1));
}

TEST_CASE("unit sphere areas") {
    CHECK(spaceform::unit_sphere_area(0) == Approx(2.0));
    CHECK(spaceform::unit_sphere_area(1) == Approx(2 * pi).epsilon(1e-15));
    CHECK(spaceform::unit_sphere_area(2) == Approx(4 * pi).epsilon(1e-15));
    CHECK(spaceform::unit_sphere_area(3) == Approx(2 * pi * pi).epsilon(1e-15));
    for (int d = 0; d <= 12; ++d) {
        CHECK(spaceform::unit_sphere_area(d) == Approx(oracles::sphere_area_recursive(d)).epsilon(1e-14));
    }
}

TEST_CASE("ball identity property over a random grid") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> k(-3.0, 3.0), u(0.02, 0.95);
    for (int i = 0; i < 300; ++i) {
        const int n = 2 + i % 5;
        const double K = k(rng);
        const double R = K > 0 ? u(rng) * pi / std::sqrt(K) : 3.0 * u(rng);
        const auto ball = spaceform::ball_geometry(n, K, R);
        const double lhs = 1.0 / spaceform::theta_integral(spaceform::ball_profile(n, K, R), R);
        CHECK(lhs == Approx(ball.isoperimetric_ratio()).epsilon(1e-9));
    }
}

TEST_CASE("theta_max samples the profile maximum") {
    // K > 0, H < 0: Theta rises before falling.
    const ThetaProfile p(2, 1.0, -1.0);
    // cos r + sin r peaks at pi/4 with value sqrt(2).
    CHECK(spaceform::theta_max(p, 1.0) == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(spaceform::theta_max(ThetaProfile(3, 0.0, 1.0), 0.5) == 1.0);
}
