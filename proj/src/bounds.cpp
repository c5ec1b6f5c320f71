// SPDX-License-Identifier: Apache-2.0
#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/errors.hpp"

namespace steklov::bounds {

using spaceform::ThetaProfile;

namespace {

void require_radius(double R) {
    if (!(R > 0) || !std::isfinite(R)) throw PreconditionError("inner radius must be positive and finite");
}

void require_dimension(int n) {
    if (n < 2) throw ValidationError("dimension must be at least 2");
}

}  // namespace

double main_lower_bound(const ThetaProfile& p, double R) {
    require_radius(R);
    return 1.0 / spaceform::theta_integral(p, R);
}

double explicit_bound_k0(int n, double H, double R) {
    require_dimension(n);
    require_radius(R);
    if (H > 0) {
        if (R * H > 1.0 + 1e-10) throw PreconditionError("inner radius exceeds 1/H");
        const double t = std::max(0.0, 1.0 - R * H);
        return n * H / (1.0 - std::pow(t, n));
    }
    if (H == 0) return 1.0 / R;
    const double h = -H;
    return n * h / (std::pow(1.0 + R * h, n) - 1.0);
}

double explicit_bound_kneg1(int n, double H, double R) {
    require_dimension(n);
    require_radius(R);
    const double m = n - 1.0;
    if (H >= 1.0) return m / -std::expm1(-m * R);
    if (H >= 0.0) return m / std::expm1(m * R);
    return m / (std::pow(1.0 - H, m) * std::expm1(m * R));
}

BallComparison ball_comparison_bound(int n, double K, double H) {
    require_dimension(n);
    const ThetaProfile profile(n, K, H);
    if (K == 0.0) {
        if (!(H > 0)) throw UnsupportedRegimeError("Euclidean comparison ball needs H > 0");
        return {n * H, 1.0 / H};
    }
    if (K == 1.0) {
        const double radius = spaceform::theta_first_zero(profile);
        return {spaceform::ball_geometry(n, K, radius).isoperimetric_ratio(), radius};
    }
    if (K == -1.0) {
        if (!(H > 1)) throw UnsupportedRegimeError("hyperbolic comparison ball needs H > 1");
        const double radius = spaceform::theta_first_zero(profile);
        return {spaceform::ball_geometry(n, K, radius).isoperimetric_ratio(), radius};
    }
    throw UnsupportedRegimeError("comparison ball is defined for K in {0, 1, -1}");
}

double mckean_bound(int n) {
    require_dimension(n);
    return n - 1.0;
}

double cheng_upper_bound(int n, double K, double r) {
    return spaceform::ball_geometry(n, K, r).isoperimetric_ratio();
}

double rough_bound(const ThetaProfile& p, double R) {
    require_radius(R);
    if (R > 1.0) throw PreconditionError("rough bound needs R <= 1");
    const double zero = spaceform::theta_first_zero(p);
    if (R > zero * (1.0 + 1e-10)) throw PreconditionError("inner radius exceeds the first zero");
    const double C = spaceform::theta_max(p, std::min(1.0, zero));
    return 1.0 / (C * R);
}

ClassicalBounds classical_bounds(int n, double H, double R, std::optional<double> width) {
    require_dimension(n);
    require_radius(R);
    ClassicalBounds out;
    out.inner_radius = 1.0 / R;
    if (H > 0) out.wang_xia = n * H;
    if (width) {
        if (!(*width > 0)) throw ValidationError("width must be positive");
        out.payne = 2.0 / *width;
        if (*width >= 2.0 * R) out.inner_radius_dominates_payne = out.inner_radius >= *out.payne;
    }
    return out;
}

BoundReport bound_report(const ThetaProfile& p, double R, const ReportExtras& extras) {
    BoundReport rep;
    rep.n = p.n();
    rep.K = p.K();
    rep.H = p.H();
    rep.R = R;
    rep.first_zero = spaceform::theta_first_zero(p);
    rep.smoothness_caveat = extras.smoothness_caveat;

    auto tag = [&](const char* bound, const char* theorem) { rep.provenance.push_back({bound, theorem}); };

    rep.q1_lower = main_lower_bound(p, R);
    tag("q1Lower", "main-theorem");

    const int n = p.n();
    const double K = p.K();
    const double H = p.H();

    if (K == 0.0) {
        rep.q1_lower_closed_form = explicit_bound_k0(n, H, R);
        tag("q1LowerClosedForm", "explicit-estimate-ricci-nonnegative");
    } else if (K == -1.0) {
        rep.q1_lower_closed_form = explicit_bound_kneg1(n, H, R);
        tag("q1LowerClosedForm", "explicit-estimate-ricci-minus-one");
    }

    if ((K == 0.0 && H > 0) || K == 1.0 || (K == -1.0 && H > 1)) {
        const BallComparison ball = ball_comparison_bound(n, K, H);
        rep.ball_comparison = ball.q1_bar;
        rep.ball_comparison_radius = ball.radius;
        tag("ballComparison", "ball-comparison-corollary");
    }

    if (K >= 0.0 && H >= 0.0) {
        rep.inner_radius_bound = 1.0 / R;
        tag("innerRadiusBound", "inner-radius-corollary");
    }

    if (R <= 1.0) {
        rep.rough = rough_bound(p, R);
        tag("rough", "rough-inner-radius-corollary");
    }

    if (K == -1.0 && H >= 1.0) {
        rep.mckean = mckean_bound(n);
        tag("mckean", "mckean-inequality");
    }

    if (K <= 0.0 || R < std::numbers::pi / std::sqrt(K)) {
        rep.cheng_upper = cheng_upper_bound(n, K, R);
        tag("chengUpper", "cheng-comparison-theorem");
    }

    if (extras.area && extras.perimeter) {
        if (!(*extras.area > 0) || !(*extras.perimeter > 0)) {
            throw ValidationError("area and perimeter must be positive");
        }
        rep.isoperimetric_upper = *extras.perimeter / *extras.area;
        rep.sandwich_consistent = rep.q1_lower <= *rep.isoperimetric_upper + 1e-9;
        tag("isoperimetricUpper", "isoperimetric-upper-bound");
    }

    const ClassicalBounds classical = classical_bounds(n, H, R, extras.width);
    if (classical.payne) {
        rep.payne = classical.payne;
        rep.inner_radius_dominates_payne = classical.inner_radius_dominates_payne;
        tag("payne", "payne-inequality");
    }
    if (K >= 0.0 && classical.wang_xia) {
        rep.wang_xia = classical.wang_xia;
        rep.main_dominates_wang_xia = rep.q1_lower >= *rep.wang_xia * (1.0 - 1e-12);
        tag("wangXia", "wang-xia-inequality");
    }
    return rep;
}

}  // namespace steklov::bounds
