// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steklov/spaceform.hpp"

// Lower and upper bounds for the first biharmonic Steklov eigenvalue q1
// of a compact domain with curvature bounds (K, H) and inner radius R.

namespace steklov::bounds {

/// 1 / int_0^R Theta. Sharp: equality for geodesic balls of M_K.
double main_lower_bound(const spaceform::ThetaProfile& p, double R);

/// Closed form of main_lower_bound for K = 0.
double explicit_bound_k0(int n, double H, double R);

/// Weaker closed forms for K = -1 obtained by over-estimating Theta:
/// H >= 1 uses e^{-r}, 0 <= H < 1 uses e^{r}, H < 0 uses (1+|H|) e^{r}.
double explicit_bound_kneg1(int n, double H, double R);

struct BallComparison {
    double q1_bar;  // isoperimetric ratio of the comparison ball
    double radius;  // radius at which the geodesic sphere has mean curvature H
};

/// Ball of M_K (K in {0, 1, -1}) whose boundary has constant mean curvature H.
/// Throws UnsupportedRegimeError when no such ball exists
/// (K = 0 with H <= 0, K = -1 with H <= 1, or K outside {0, 1, -1}).
BallComparison ball_comparison_bound(int n, double K, double H);

/// q1 > n - 1 for hyperbolic-type domains with mean curvature >= 1.
double mckean_bound(int n);

/// q1 of the model ball B_K(r); bounds q1(B(x0, r)) from above on any
/// manifold with Ricci >= (n-1)K when r is below the injectivity radius at x0.
double cheng_upper_bound(int n, double K, double r);

/// c/R with c = 1 / max Theta on [0, min(1, first zero)]; valid for R <= 1.
double rough_bound(const spaceform::ThetaProfile& p, double R);

struct ClassicalBounds {
    std::optional<double> payne;     // 2 / width, convex Euclidean domains
    std::optional<double> wang_xia;  // n H, Ricci >= 0 and H > 0
    double inner_radius;             // 1 / R
    // 1/R >= 2/width whenever width >= 2R.
    std::optional<bool> inner_radius_dominates_payne;
};

ClassicalBounds classical_bounds(int n, double H, double R, std::optional<double> width = {});

struct Provenance {
    std::string bound;
    std::string theorem;
};

struct BoundReport {
    int n = 0;
    double K = 0;
    double H = 0;
    double R = 0;
    double first_zero = 0;  // may be +infinity

    double q1_lower = 0;
    std::optional<double> q1_lower_closed_form;
    std::optional<double> ball_comparison;
    std::optional<double> ball_comparison_radius;
    std::optional<double> inner_radius_bound;  // 1/R, Ricci >= 0 and H >= 0
    std::optional<double> rough;               // c/R, R <= 1
    std::optional<double> mckean;
    std::optional<double> cheng_upper;  // geodesic balls of radius R only
    std::optional<double> isoperimetric_upper;
    std::optional<double> payne;
    std::optional<double> wang_xia;

    // main bound >= nH (Ricci >= 0, H > 0).
    std::optional<bool> main_dominates_wang_xia;
    std::optional<bool> inner_radius_dominates_payne;
    // q1_lower <= isoperimetric_upper + 1e-9.
    std::optional<bool> sandwich_consistent;
    bool smoothness_caveat = false;

    std::vector<Provenance> provenance;
};

struct ReportExtras {
    std::optional<double> area;
    std::optional<double> perimeter;
    std::optional<double> width;
    // Set when the inputs come from a domain with corners.
    bool smoothness_caveat = false;
};

/// Every bound applicable to the curvature data, tagged with the result it
/// comes from. Inapplicable bounds are left empty.
BoundReport bound_report(const spaceform::ThetaProfile& p, double R, const ReportExtras& extras = {});

}  // namespace steklov::bounds
