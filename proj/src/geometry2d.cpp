// SPDX-License-Identifier: Apache-2.0
#include "steklov/geometry2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "steklov/errors.hpp"
#include "steklov/lp.hpp"
#include "steklov/quadrature.hpp"

namespace steklov::geometry {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double norm(Point p) { return std::hypot(p.x, p.y); }

void validate(const Shape& shape) {
    std::visit(Overloaded{
                   [](const Disk& d) {
                       if (!(d.radius > 0) || !std::isfinite(d.radius)) {
                           throw ValidationError("disk radius must be positive");
                       }
                   },
                   [](const Ellipse& e) {
                       if (!(e.b > 0) || !std::isfinite(e.a) || e.a < e.b) {
                           throw ValidationError("ellipse needs a >= b > 0");
                       }
                   },
                   [](const ConvexPolygon& poly) {
                       const auto& v = poly.vertices;
                       const std::size_t n = v.size();
                       if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
                       for (const Point& p : v) {
                           if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                               throw ValidationError("polygon vertices must be finite");
                           }
                       }
                       double turning = 0.0;
                       for (std::size_t i = 0; i < n; ++i) {
                           const Point e0 = v[(i + 1) % n] - v[i];
                           const Point e1 = v[(i + 2) % n] - v[(i + 1) % n];
                           const double l0 = norm(e0);
                           const double l1 = norm(e1);
                           if (l0 == 0.0 || l1 == 0.0) throw ValidationError("polygon has repeated vertices");
                           if (!(cross(e0, e1) > 1e-14 * l0 * l1)) {
                               throw ValidationError(
                                   "polygon must be strictly convex with counterclockwise vertices");
                           }
                           turning += std::atan2(cross(e0, e1), dot(e0, e1));
                       }
                       if (std::abs(turning - 2.0 * kPi) > 1e-9) {
                           throw ValidationError("polygon boundary winds more than once");
                       }
                   },
               },
               shape);
}

}  // namespace

PlanarDomain::PlanarDomain(Shape shape) : shape_(std::move(shape)) { validate(shape_); }

PlanarDomain PlanarDomain::regular_polygon(int sides, double circumradius, double phase) {
    if (sides < 3) throw ValidationError("regular polygon needs at least 3 sides");
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(sides));
    for (int i = 0; i < sides; ++i) {
        const double t = phase + 2.0 * kPi * i / sides;
        v.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
    }
    return polygon(std::move(v));
}

Point PlanarDomain::centroid() const {
    const auto* poly = std::get_if<ConvexPolygon>(&shape_);
    if (!poly) return {0.0, 0.0};
    const auto& v = poly->vertices;
    double a = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point p = v[i];
        const Point q = v[(i + 1) % v.size()];
        const double w = cross(p, q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

bool PlanarDomain::contains(Point p) const {
    return std::visit(Overloaded{
                          [&](const Disk& d) { return norm(p) < d.radius; },
                          [&](const Ellipse& e) {
                              const double u = p.x / e.a;
                              const double w = p.y / e.b;
                              return u * u + w * w < 1.0;
                          },
                          [&](const ConvexPolygon& poly) {
                              const auto& v = poly.vertices;
                              for (std::size_t i = 0; i < v.size(); ++i) {
                                  if (!(cross(v[(i + 1) % v.size()] - v[i], p - v[i]) > 0)) return false;
                              }
                              return true;
                          },
                      },
                      shape_);
}

double PlanarDomain::max_distance_from(Point c) const {
    return std::visit(Overloaded{
                          [&](const Disk& d) { return norm(c) + d.radius; },
                          [&](const Ellipse& e) {
                              constexpr int kSamples = 4096;
                              double best = 0.0;
                              for (int i = 0; i < kSamples; ++i) {
                                  const double t = 2.0 * kPi * i / kSamples;
                                  best = std::max(best, norm(Point{e.a * std::cos(t), e.b * std::sin(t)} - c));
                              }
                              return best;
                          },
                          [&](const ConvexPolygon& poly) {
                              double best = 0.0;
                              for (const Point& v : poly.vertices) best = std::max(best, norm(v - c));
                              return best;
                          },
                      },
                      shape_);
}

PlanarDomain PlanarDomain::scaled(double t) const {
    if (!(t > 0)) throw ValidationError("scale factor must be positive");
    return std::visit(Overloaded{
                          [&](const Disk& d) { return PlanarDomain(Disk{t * d.radius}); },
                          [&](const Ellipse& e) { return PlanarDomain(Ellipse{t * e.a, t * e.b}); },
                          [&](const ConvexPolygon& poly) {
                              ConvexPolygon out = poly;
                              for (Point& v : out.vertices) v = t * v;
                              return PlanarDomain(std::move(out));
                          },
                      },
                      shape_);
}

PlanarDomain build_quadrature(PlanarDomain d, int order) {
    if (order < 4) throw ValidationError("quadrature order must be at least 4");
    d.boundary_.clear();
    d.interior_.clear();

    auto smooth = [&](double a, double b) {
        // (x, y) = (a cos t, b sin t); a == b is the disk.
        const int m = std::max(64, 8 * order);
        d.boundary_.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            const double t = 2.0 * kPi * j / m;
            const double c = std::cos(t);
            const double s = std::sin(t);
            const double speed = std::hypot(a * s, b * c);
            d.boundary_.push_back({{a * c, b * s}, 2.0 * kPi / m * speed, {b * c / speed, a * s / speed}});
        }
        const quadrature::GaussRule radial = quadrature::gauss_legendre(order, 0.0, 1.0);
        const int angular = std::max(32, 4 * order);
        d.interior_.reserve(radial.nodes.size() * static_cast<std::size_t>(angular));
        for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
            const double rho = radial.nodes[i];
            const double w = radial.weights[i] * rho * (2.0 * kPi / angular) * a * b;
            for (int j = 0; j < angular; ++j) {
                const double t = 2.0 * kPi * j / angular;
                d.interior_.push_back({{a * rho * std::cos(t), b * rho * std::sin(t)}, w});
            }
        }
    };

    std::visit(Overloaded{
                   [&](const Disk& disk) { smooth(disk.radius, disk.radius); },
                   [&](const Ellipse& e) { smooth(e.a, e.b); },
                   [&](const ConvexPolygon& poly) {
                       const auto& v = poly.vertices;
                       const std::size_t n = v.size();
                       const quadrature::GaussRule edge_rule = quadrature::gauss_legendre(order, 0.0, 1.0);
                       for (std::size_t i = 0; i < n; ++i) {
                           const Point e = v[(i + 1) % n] - v[i];
                           const double len = norm(e);
                           const Point normal{e.y / len, -e.x / len};
                           for (std::size_t k = 0; k < edge_rule.nodes.size(); ++k) {
                               d.boundary_.push_back({v[i] + edge_rule.nodes[k] * e, len * edge_rule.weights[k], normal});
                           }
                       }
                       // Duffy map of the unit square onto triangle (c, v_i, v_i+1):
                       // p = c + u (v_i - c) + u w (v_i+1 - v_i), Jacobian u * 2|T|.
                       const Point c = d.centroid();
                       const quadrature::GaussRule g = quadrature::gauss_legendre(order + 1, 0.0, 1.0);
                       for (std::size_t i = 0; i < n; ++i) {
                           const Point a = v[i] - c;
                           const Point b = v[(i + 1) % n] - v[i];
                           const double jac = cross(a, b);
                           for (std::size_t p = 0; p < g.nodes.size(); ++p) {
                               const double u = g.nodes[p];
                               for (std::size_t q = 0; q < g.nodes.size(); ++q) {
                                   const double w = g.nodes[q];
                                   d.interior_.push_back(
                                       {c + u * a + (u * w) * b, g.weights[p] * g.weights[q] * u * jac});
                               }
                           }
                       }
                   },
               },
               d.shape_);
    d.order_ = order;
    return d;
}

double polygon_area(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
    return 0.5 * a;
}

double polygon_perimeter(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    double p = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) p += norm(v[(i + 1) % v.size()] - v[i]);
    return p;
}

double ellipse_perimeter(double a, double b) {
    const double quarter = quadrature::integrate(
        [&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); }, 0.0, kPi / 2.0, 2.5e-11,
        1e-14);
    return 4.0 * quarter;
}

InscribedCircle chebyshev_center(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    const int m = static_cast<int>(v.size());
    const Point c0 = PlanarDomain(poly).centroid();

    // Unknowns (dx+, dx-, dy+, dy-, r) >= 0 with center = c0 + (dx, dy);
    // n_i . (c0 + d) + r <= n_i . v_i for each outward edge normal n_i.
    lp::Problem pb;
    pb.rows = m;
    pb.cols = 5;
    pb.A.reserve(static_cast<std::size_t>(5 * m));
    for (int i = 0; i < m; ++i) {
        const Point e = v[static_cast<std::size_t>((i + 1) % m)] - v[static_cast<std::size_t>(i)];
        const double len = norm(e);
        const Point nrm{e.y / len, -e.x / len};
        pb.A.insert(pb.A.end(), {nrm.x, -nrm.x, nrm.y, -nrm.y, 1.0});
        pb.b.push_back(std::max(0.0, dot(nrm, v[static_cast<std::size_t>(i)] - c0)));
    }
    pb.c = {0.0, 0.0, 0.0, 0.0, 1.0};
    const lp::Solution sol = lp::maximize(pb);
    return {{c0.x + sol.x[0] - sol.x[1], c0.y + sol.x[2] - sol.x[3]}, sol.x[4]};
}

double min_width(const ConvexPolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    // Distance of vertex k from the line through edge i (positive inside).
    auto height = [&](std::size_t i, std::size_t k) {
        const Point e = v[(i + 1) % n] - v[i];
        return cross(e, v[k % n] - v[i]) / norm(e);
    };
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (j <= i + 1) j = i + 1;
        // Advance the antipodal pointer while the height keeps growing.
        for (std::size_t guard = 0; guard < n && height(i, j + 1) >= height(i, j); ++guard) ++j;
        best = std::min(best, height(i, j));
    }
    return best;
}

DomainMetrics domain_metrics(const PlanarDomain& d) {
    return std::visit(Overloaded{
                          [](const Disk& disk) {
                              const double r = disk.radius;
                              return DomainMetrics{kPi * r * r, 2.0 * kPi * r, r, 2.0 * r, 1.0 / r, {0, 0}};
                          },
                          [](const Ellipse& e) {
                              return DomainMetrics{kPi * e.a * e.b, ellipse_perimeter(e.a, e.b), e.b, 2.0 * e.b,
                                                   e.b / (e.a * e.a), {0, 0}};
                          },
                          [](const ConvexPolygon& poly) {
                              const InscribedCircle inc = chebyshev_center(poly);
                              return DomainMetrics{polygon_area(poly), polygon_perimeter(poly), inc.radius,
                                                   min_width(poly), 0.0, inc.center};
                          },
                      },
                      d.shape());
}

}  // namespace steklov::geometry
