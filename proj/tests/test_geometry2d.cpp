// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "steklov/errors.hpp"
#include "steklov/geometry2d.hpp"
#include "steklov/oracles.hpp"

using namespace steklov;
using namespace steklov::geometry;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {

PlanarDomain unit_square() { return PlanarDomain::polygon({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}); }

template <class F>
double interior_sum(const PlanarDomain& d, F f) {
    double s = 0;
    for (const auto& nd : d.interior_quadrature()) s += nd.weight * f(nd.point);
    return s;
}

template <class F>
double boundary_sum(const PlanarDomain& d, F f) {
    double s = 0;
    for (const auto& nd : d.boundary_quadrature()) s += nd.weight * f(nd);
    return s;
}

// max over an interior grid of the distance to a dense boundary sample.
double ellipse_grid_inradius(double a, double b, int cells) {
    std::vector<Point> bd;
    for (int i = 0; i < 4000; ++i) {
        const double t = 2 * pi * i / 4000;
        bd.push_back({a * std::cos(t), b * std::sin(t)});
    }
    double best = 0;
    for (int i = 0; i <= cells; ++i) {
        for (int j = 0; j <= cells; ++j) {
            const Point p{-a + 2 * a * i / cells, -b + 2 * b * j / cells};
            if ((p.x * p.x) / (a * a) + (p.y * p.y) / (b * b) >= 1) continue;
            double m = INFINITY;
            for (const auto& q : bd) m = std::min(m, std::hypot(p.x - q.x, p.y - q.y));
            best = std::max(best, m);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(PlanarDomain::disk(0.0), ValidationError);
    CHECK_THROWS_AS(PlanarDomain::disk(-1.0), ValidationError);
    CHECK_THROWS_AS(PlanarDomain::ellipse(1.0, 2.0), ValidationError);
    CHECK_THROWS_AS(PlanarDomain::ellipse(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(PlanarDomain::polygon({{0, 0}, {1, 0}}), ValidationError);
    // clockwise
    CHECK_THROWS_AS(PlanarDomain::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), ValidationError);
    // reflex vertex
    CHECK_THROWS_AS(PlanarDomain::polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}), ValidationError);
    // collinear vertex
    CHECK_THROWS_AS(PlanarDomain::polygon({{0, 0}, {1, 0}, {2, 0}, {2, 2}}), ValidationError);
    // self-intersecting star winds twice
    std::vector<Point> star;
    for (int k = 0; k < 5; ++k) star.push_back({std::cos(4 * pi * k / 5), std::sin(4 * pi * k / 5)});
    CHECK_THROWS_AS(PlanarDomain::polygon(star), ValidationError);
    CHECK_THROWS_AS(PlanarDomain::regular_polygon(2, 1.0), ValidationError);
}

TEST_CASE("domain_metrics: unit disk") {
    auto m = domain_metrics(PlanarDomain::disk(1.0));
    CHECK(m.area == Approx(pi).epsilon(1e-15));
    CHECK(m.perimeter == Approx(2 * pi).epsilon(1e-15));
    CHECK(m.inner_radius == 1.0);
    CHECK(*m.min_width == 2.0);
    CHECK(m.min_curvature == 1.0);
}

TEST_CASE("domain_metrics: ellipse (2,1)") {
    auto m = domain_metrics(PlanarDomain::ellipse(2.0, 1.0));
    CHECK(m.area == Approx(2 * pi).epsilon(1e-15));
    CHECK(std::abs(m.perimeter - oracles::ellipse_perimeter_elliptic(2.0, 1.0)) < 1e-10);
    CHECK(m.perimeter == Approx(9.6884482).epsilon(1e-8));
    CHECK(m.inner_radius == 1.0);
    CHECK(std::abs(ellipse_grid_inradius(2.0, 1.0, 80) - m.inner_radius) < 2.0 * 2.0 / 80);
    CHECK(*m.min_width == 2.0);
    CHECK(m.min_curvature == 0.25);
}

TEST_CASE("domain_metrics: circumscribed equilateral triangle") {
    auto tri = PlanarDomain::regular_polygon(3, 2.0, pi / 2);
    auto m = domain_metrics(tri);
    CHECK(std::abs(m.inner_radius - 1.0) < 1e-12);
    CHECK(std::abs(*m.min_width - 3.0) < 1e-12);
    CHECK(std::hypot(m.incenter.x, m.incenter.y) < 1e-12);
    CHECK(m.min_curvature == 0.0);
    CHECK(m.area == Approx(3 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(m.perimeter == Approx(6 * std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("chebyshev center of random triangles is the incenter") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int tested = 0;
    while (tested < 200) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        const double orient = cross(b - a, c - a);
        if (std::abs(orient) < 0.5) continue;
        if (orient < 0) std::swap(b, c);
        const auto ref = oracles::triangle_incircle(a, b, c);
        const auto lp = chebyshev_center({{a, b, c}});
        CHECK(std::abs(lp.radius - ref.radius) < 1e-10);
        CHECK(std::hypot(lp.center.x - ref.center.x, lp.center.y - ref.center.y) < 1e-9);
        ++tested;
    }
}

TEST_CASE("chebyshev center against a grid scan") {
    std::vector<std::vector<Point>> polys = {
        {{0, 0}, {4, 0}, {4, 1}, {0, 1}},
        {{0, 0}, {3, 0}, {3.5, 1}, {2, 2.5}, {-0.5, 1.5}},
    };
    for (const auto& v : polys) {
        const auto grid = oracles::grid_inradius(v, 300);
        const double r = chebyshev_center({v}).radius;
        CHECK(r >= grid.radius - 1e-12);
        CHECK(r - grid.radius <= 2 * grid.spacing);
    }
    CHECK(chebyshev_center({polys[0]}).radius == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("min_width") {
    CHECK(min_width(std::get<ConvexPolygon>(PlanarDomain::regular_polygon(6, 1.0).shape())) ==
          Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(min_width({{{0, 0}, {4, 0}, {4, 1}, {0, 1}}}) == Approx(1.0).epsilon(1e-14));
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> t(3 + trial % 12);
        for (double& x : t) x = u(rng);
        std::sort(t.begin(), t.end());
        std::vector<Point> v;
        for (double x : t) v.push_back({2.0 * std::cos(x), std::sin(x)});
        CHECK(min_width({v}) == Approx(oracles::brute_force_width(v)).epsilon(1e-12));
    }
}

TEST_CASE("polygon area and perimeter") {
    ConvexPolygon sq = std::get<ConvexPolygon>(unit_square().shape());
    CHECK(polygon_area(sq) == Approx(1.0).epsilon(1e-15));
    CHECK(polygon_perimeter(sq) == Approx(4.0).epsilon(1e-15));
    auto hex = std::get<ConvexPolygon>(PlanarDomain::regular_polygon(6, 1.0).shape());
    CHECK(polygon_area(hex) == Approx(1.5 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(polygon_perimeter(hex) == Approx(6.0).epsilon(1e-14));
}

TEST_CASE("ellipse perimeter against the complete elliptic integral") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}, {5.0, 0.2}, {1.0, 0.999}}) {
        CHECK(std::abs(ellipse_perimeter(a, b) - oracles::ellipse_perimeter_elliptic(a, b)) < 1e-10 * a);
    }
    CHECK(ellipse_perimeter(1.0, 1.0) == Approx(2 * pi).epsilon(1e-13));
}

TEST_CASE("build_quadrature weight sums") {
    auto disk = build_quadrature(PlanarDomain::disk(1.0), 8);
    CHECK(std::abs(interior_sum(disk, [](Point) { return 1.0; }) - pi) < 1e-12);
    auto ell = build_quadrature(PlanarDomain::ellipse(2.0, 1.0), 8);
    CHECK(std::abs(interior_sum(ell, [](Point) { return 1.0; }) - 2 * pi) < 1e-10);
    auto sq = build_quadrature(unit_square(), 8);
    CHECK(std::abs(boundary_sum(sq, [](const BoundaryNode&) { return 1.0; }) - 4.0) < 1e-12);
    CHECK(std::abs(interior_sum(sq, [](Point) { return 1.0; }) - 1.0) < 1e-12);
    CHECK(sq.has_quadrature());
    CHECK(sq.quadrature_order() == 8);
}

TEST_CASE("build_quadrature polynomial exactness") {
    auto disk = build_quadrature(PlanarDomain::disk(1.0), 8);
    CHECK(std::abs(interior_sum(disk, [](Point p) { return p.x * p.x + p.y * p.y; }) - pi / 2) < 1e-12);
    CHECK(std::abs(interior_sum(disk, [](Point p) { return std::pow(p.x, 4); }) - pi / 8) < 1e-12);
    auto sq = build_quadrature(unit_square(), 8);
    CHECK(std::abs(interior_sum(sq, [](Point p) { return p.x * p.x; }) - 1.0 / 12) < 1e-14);
    CHECK(std::abs(interior_sum(sq, [](Point p) { return std::pow(p.x * p.y, 4); }) - 1.0 / 6400) < 1e-15);
    CHECK(std::abs(boundary_sum(sq, [](const BoundaryNode& n) { return n.point.x * n.point.x; }) - (0.5 + 1.0 / 6)) <
          1e-14);
}

TEST_CASE("boundary normals satisfy the divergence theorem") {
    // int_bd x . n = 2 |Omega|
    for (auto d : {PlanarDomain::disk(1.3), PlanarDomain::ellipse(3.0, 1.0), PlanarDomain::regular_polygon(7, 2.0),
                   unit_square()}) {
        auto q = build_quadrature(d, 10);
        const double flux = boundary_sum(q, [](const BoundaryNode& n) { return dot(n.point, n.normal); });
        CHECK(flux == Approx(2 * domain_metrics(d).area).epsilon(1e-12));
        for (const auto& n : q.boundary_quadrature()) CHECK(std::abs(std::hypot(n.normal.x, n.normal.y) - 1) < 1e-14);
    }
}

TEST_CASE("build_quadrature rejects low orders") {
    CHECK_THROWS_AS(build_quadrature(PlanarDomain::disk(1.0), 3), ValidationError);
    CHECK_NOTHROW(build_quadrature(PlanarDomain::disk(1.0), 4));
}

TEST_CASE("contains, centroid, scaling") {
    auto d = PlanarDomain::ellipse(2.0, 1.0);
    CHECK(d.contains({1.9, 0.0}));
    CHECK_FALSE(d.contains({2.0, 0.0}));
    CHECK_FALSE(d.contains({0.0, 1.1}));
    auto sq = unit_square();
    CHECK(std::hypot(sq.centroid().x, sq.centroid().y) < 1e-15);
    CHECK(sq.max_distance_from({0, 0}) == Approx(std::sqrt(0.5)).epsilon(1e-15));
    auto big = build_quadrature(d, 8).scaled(2.0);
    CHECK(domain_metrics(big).area == Approx(8 * pi).epsilon(1e-14));
    if (big.has_quadrature()) CHECK(std::abs(interior_sum(big, [](Point) { return 1.0; }) - 8 * pi) < 1e-9);
}
