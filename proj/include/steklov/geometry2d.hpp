// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

// Planar Euclidean domains (n = 2, K = 0) and the quantities the bounds
// consume: area, perimeter, inner radius, minimal width, minimal boundary
// curvature. Domains also carry the quadrature rules used by the solver.

namespace steklov::geometry {

struct Point {
    double x = 0;
    double y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

struct Disk {
    double radius;
};

struct Ellipse {
    double a;  // semi-major
    double b;  // semi-minor
};

/// Strictly convex, counterclockwise vertex list.
struct ConvexPolygon {
    std::vector<Point> vertices;
};

using Shape = std::variant<Disk, Ellipse, ConvexPolygon>;

struct BoundaryNode {
    Point point;
    double weight;
    Point normal;  // outward unit normal
};

struct InteriorNode {
    Point point;
    double weight;
};

class PlanarDomain {
public:
    /// Validates the shape; throws ValidationError for non-positive sizes,
    /// a < b, or a polygon that is not strictly convex and counterclockwise.
    explicit PlanarDomain(Shape shape);

    static PlanarDomain disk(double radius) { return PlanarDomain(Disk{radius}); }
    static PlanarDomain ellipse(double a, double b) { return PlanarDomain(Ellipse{a, b}); }
    static PlanarDomain polygon(std::vector<Point> vertices) {
        return PlanarDomain(ConvexPolygon{std::move(vertices)});
    }
    /// Regular k-gon centered at the origin with the given circumradius.
    static PlanarDomain regular_polygon(int sides, double circumradius, double phase = 0.0);

    const Shape& shape() const { return shape_; }
    bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(shape_); }

    bool has_quadrature() const { return order_ > 0; }
    int quadrature_order() const { return order_; }
    std::span<const BoundaryNode> boundary_quadrature() const { return boundary_; }
    std::span<const InteriorNode> interior_quadrature() const { return interior_; }

    /// Centroid of the region.
    Point centroid() const;
    /// True if p lies strictly inside the domain.
    bool contains(Point p) const;
    /// Largest |q - c| over the boundary.
    double max_distance_from(Point c) const;
    /// Homothetic copy scaled by t about the origin, quadrature dropped.
    PlanarDomain scaled(double t) const;

private:
    friend PlanarDomain build_quadrature(PlanarDomain d, int order);

    Shape shape_;
    int order_ = 0;
    std::vector<BoundaryNode> boundary_;
    std::vector<InteriorNode> interior_;
};

/// Populates the boundary and interior rules. Disks and ellipses: periodic
/// trapezoid on the boundary with max(64, 8 order) nodes, polar tensor rule
/// inside. Polygons: `order` Gauss-Legendre nodes per edge, centroid fan of
/// triangles with a Duffy-collapsed rule exact to degree 2 order.
/// Throws ValidationError if order < 4.
PlanarDomain build_quadrature(PlanarDomain d, int order);

struct DomainMetrics {
    double area;
    double perimeter;
    double inner_radius;
    std::optional<double> min_width;
    double min_curvature;  // H for n = 2
    Point incenter;        // center of a maximal inscribed disk
};

DomainMetrics domain_metrics(const PlanarDomain& d);

struct InscribedCircle {
    Point center;
    double radius;
};

/// Largest disk inside a convex polygon, from the linear program
/// max r subject to r <= distance to every edge line.
InscribedCircle chebyshev_center(const ConvexPolygon& poly);

/// Minimal distance between two parallel lines enclosing the polygon
/// (rotating calipers).
double min_width(const ConvexPolygon& poly);

double polygon_area(const ConvexPolygon& poly);
double polygon_perimeter(const ConvexPolygon& poly);

/// Arclength of the ellipse by adaptive quadrature (tolerance 1e-10).
double ellipse_perimeter(double a, double b);

}  // namespace steklov::geometry
