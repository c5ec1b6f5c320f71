// SPDX-License-Identifier: Apache-2.0
#include "steklov/spaceform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "detail/series.hpp"
#include "steklov/errors.hpp"
#include "steklov/quadrature.hpp"

namespace steklov::spaceform {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroSlack = 1e-10;

double ipow(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

using detail::sinh_minus_x;
using detail::x_minus_sin;

// Integral of s_K(t)^(n-1) over [0, R].
double warped_volume(int n, double K, double R) {
    if (K == 0.0) return std::pow(R, n) / n;
    const double a = std::sqrt(std::abs(K));
    if (n == 2) {
        const double h = std::sin(a * R / 2.0);
        const double hh = std::sinh(a * R / 2.0);
        return K > 0 ? 2.0 * h * h / K : 2.0 * hh * hh / -K;
    }
    if (n == 3) {
        const double x = 2.0 * a * R;
        return (K > 0 ? x_minus_sin(x) : sinh_minus_x(x)) / (4.0 * a * a * a);
    }
    return quadrature::integrate([&](double t) { return ipow(sk_eval(K, t).s, n - 1); }, 0.0, R,
                                 1e-300, 1e-13);
}

}  // namespace

SkValue sk_eval(double K, double r) {
    if (K > 0) {
        const double a = std::sqrt(K);
        return {std::sin(a * r) / a, std::cos(a * r)};
    }
    if (K < 0) {
        const double a = std::sqrt(-K);
        return {std::sinh(a * r) / a, std::cosh(a * r)};
    }
    return {r, 1.0};
}

ThetaProfile::ThetaProfile(int n, double K, double H) : n_(n), K_(K), H_(H) {
    if (n < 2) throw ValidationError("dimension must be at least 2");
    if (!std::isfinite(K) || !std::isfinite(H)) throw ValidationError("K and H must be finite");
}

double theta_eval(const ThetaProfile& p, double r) {
    if (p.K() < 0) {
        // cosh(ar) - (H/a) sinh(ar) regrouped by exponentials; no cancellation when H ~ a.
        const double a = std::sqrt(-p.K());
        const double c = p.H() / a;
        const double base = 0.5 * ((1.0 - c) * std::exp(a * r) + (1.0 + c) * std::exp(-a * r));
        return ipow(base, p.n() - 1);
    }
    const SkValue v = sk_eval(p.K(), r);
    return ipow(v.s_prime - p.H() * v.s, p.n() - 1);
}

double theta_first_zero(const ThetaProfile& p) {
    const double K = p.K();
    const double H = p.H();
    if (K > 0) {
        // cot(a r) = H / a has its unique root in (0, pi/a) at a r = atan2(a, H).
        const double a = std::sqrt(K);
        return std::atan2(a, H) / a;
    }
    if (K < 0) {
        const double a = std::sqrt(-K);
        return H > a ? std::atanh(a / H) / a : kInf;
    }
    return H > 0 ? 1.0 / H : kInf;
}

double theta_integral(const ThetaProfile& p, double R) {
    if (!(R >= 0.0) || !std::isfinite(R)) throw PreconditionError("inner radius must be finite and >= 0");
    const double zero = theta_first_zero(p);
    if (R > zero * (1.0 + kZeroSlack)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "inner radius " << R << " exceeds the first zero " << zero
            << " of the comparison density; curvature data are inconsistent";
        throw PreconditionError(msg.str());
    }
    const double upper = std::min(R, zero);
    const double H = p.H();
    const int n = p.n();
    if (p.K() == 0.0) {
        if (H == 0.0) return upper;
        // (1 - (1 - H R)^n) / (n H)
        return -std::expm1(n * std::log1p(-H * upper)) / (n * H);
    }
    return quadrature::integrate([&](double r) { return theta_eval(p, r); }, 0.0, upper, 1e-10,
                                 1e-13);
}

double theta_max(const ThetaProfile& p, double L) {
    if (!(L > 0)) return theta_eval(p, 0.0);
    constexpr int kSamples = 512;
    int best = 0;
    double best_value = theta_eval(p, 0.0);
    for (int i = 1; i <= kSamples; ++i) {
        const double v = theta_eval(p, L * i / kSamples);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    // Golden-section refinement on the bracketing cells.
    double lo = L * std::max(0, best - 1) / kSamples;
    double hi = L * std::min(kSamples, best + 1) / kSamples;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = theta_eval(p, x1);
    double f2 = theta_eval(p, x2);
    for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, L); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = theta_eval(p, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = theta_eval(p, x1);
        }
    }
    return std::max({best_value, f1, f2});
}

double unit_sphere_area(int d) {
    if (d < 0) throw ValidationError("sphere dimension must be >= 0");
    const double half = (d + 1) / 2.0;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

SpaceFormBall ball_geometry(int n, double K, double R) {
    if (n < 2) throw ValidationError("dimension must be at least 2");
    if (!(R > 0) || !std::isfinite(R)) throw DomainError("ball radius must be positive and finite");
    if (K > 0 && R >= std::numbers::pi / std::sqrt(K)) {
        throw DomainError("spherical ball radius must be below pi/sqrt(K)");
    }
    const SkValue v = sk_eval(K, R);
    const double omega = unit_sphere_area(n - 1);
    SpaceFormBall ball{};
    ball.n = n;
    ball.K = K;
    ball.radius = R;
    ball.boundary_area = omega * ipow(v.s, n - 1);
    ball.volume = omega * warped_volume(n, K, R);
    ball.mean_curvature = v.s_prime / v.s;
    return ball;
}

ThetaProfile ball_profile(int n, double K, double R) {
    const SkValue v = sk_eval(K, R);
    return ThetaProfile(n, K, v.s_prime / v.s);
}

}  // namespace steklov::spaceform
