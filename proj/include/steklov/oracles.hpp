// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "steklov/geometry2d.hpp"

// Reference computations that share no code path with the library routines
// they are used to check.

namespace steklov::oracles {

/// cosh and sinh from their Taylor series.
double sinh_series(double x);
double cosh_series(double x);

/// Composite Simpson rule on `panels` (even) subintervals, refined by one
/// Richardson step against half as many panels.
double simpson(const std::function<double(double)>& f, double a, double b, int panels = 4096);

/// Root of f in [lo, hi] by plain bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi);

/// Area of the unit d-sphere from the recursion w_d = 2 pi w_{d-2} / (d-1),
/// w_0 = 2, w_1 = 2 pi.
double sphere_area_recursive(int d);

/// Triangle incenter and inradius from side lengths.
struct Incircle {
    geometry::Point center;
    double radius;
};
Incircle triangle_incircle(geometry::Point a, geometry::Point b, geometry::Point c);

/// Largest distance-to-boundary of a convex polygon over a cells x cells grid
/// of its bounding box; returns the value and the grid spacing.
struct GridInradius {
    double radius;
    double spacing;
};
GridInradius grid_inradius(const std::vector<geometry::Point>& ccw_vertices, int cells = 400);

/// Minimal width by checking every edge against every vertex.
double brute_force_width(const std::vector<geometry::Point>& ccw_vertices);

/// Ellipse perimeter 4 a E(e) via the complete elliptic integral of the second kind.
double ellipse_perimeter_elliptic(double a, double b);

}  // namespace steklov::oracles
