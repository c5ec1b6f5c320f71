// SPDX-License-Identifier: Apache-2.0
#include "steklov/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace steklov::oracles {

using geometry::Point;

double sinh_series(double x) {
    double term = x;
    double sum = 0.0;
    for (int k = 1; k < 200 && term != 0.0; ++k) {
        sum += term;
        term *= x * x / ((2.0 * k) * (2.0 * k + 1.0));
    }
    return sum;
}

double cosh_series(double x) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200 && term != 0.0; ++k) {
        sum += term;
        term *= x * x / ((2.0 * k - 1.0) * (2.0 * k));
    }
    return sum;
}

namespace {

double simpson_raw(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

}  // namespace

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    panels += panels % 2;
    const double fine = simpson_raw(f, a, b, panels);
    const double coarse = simpson_raw(f, a, b, panels / 2);
    return fine + (fine - coarse) / 15.0;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    if ((flo > 0) == (f(hi) > 0)) throw std::invalid_argument("bisect: no sign change");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double sphere_area_recursive(int d) {
    if (d == 0) return 2.0;
    if (d == 1) return 2.0 * std::numbers::pi;
    return 2.0 * std::numbers::pi * sphere_area_recursive(d - 2) / (d - 1);
}

Incircle triangle_incircle(Point a, Point b, Point c) {
    const double la = std::hypot(b.x - c.x, b.y - c.y);
    const double lb = std::hypot(a.x - c.x, a.y - c.y);
    const double lc = std::hypot(a.x - b.x, a.y - b.y);
    const double p = la + lb + lc;
    const Point center{(la * a.x + lb * b.x + lc * c.x) / p, (la * a.y + lb * b.y + lc * c.y) / p};
    const double s = p / 2.0;
    const double area = std::sqrt(std::max(0.0, s * (s - la) * (s - lb) * (s - lc)));
    return {center, area / s};
}

GridInradius grid_inradius(const std::vector<Point>& v, int cells) {
    double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const Point& p : v) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double hx = (xmax - xmin) / cells;
    const double hy = (ymax - ymin) / cells;
    double best = 0.0;
    for (int i = 0; i <= cells; ++i) {
        for (int j = 0; j <= cells; ++j) {
            const Point p{xmin + i * hx, ymin + j * hy};
            double dist = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < v.size(); ++k) {
                const Point a = v[k];
                const Point b = v[(k + 1) % v.size()];
                const double ex = b.x - a.x, ey = b.y - a.y;
                dist = std::min(dist, (ex * (p.y - a.y) - ey * (p.x - a.x)) / std::hypot(ex, ey));
            }
            best = std::max(best, dist);
        }
    }
    return {best, std::max(hx, hy)};
}

double brute_force_width(const std::vector<Point>& v) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Point a = v[k];
        const Point b = v[(k + 1) % v.size()];
        const double ex = b.x - a.x, ey = b.y - a.y, len = std::hypot(ex, ey);
        double far = 0.0;
        for (const Point& p : v) far = std::max(far, std::abs(ex * (p.y - a.y) - ey * (p.x - a.x)) / len);
        best = std::min(best, far);
    }
    return best;
}

double ellipse_perimeter_elliptic(double a, double b) {
    const double e = std::sqrt(1.0 - (b * b) / (a * a));
    return 4.0 * a * std::comp_ellint_2(e);
}

}  // namespace steklov::oracles
