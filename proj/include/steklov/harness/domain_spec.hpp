// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "steklov/geometry2d.hpp"

namespace steklov::harness {

/// Flat cylinder N x [0, 2R] with N a circle of length `circumference`.
struct Cylinder {
    double circumference;
    double half_height;
};

struct CurvatureTuple {
    std::optional<int> n;
    std::optional<double> K;
    std::optional<double> H;
    std::optional<double> R;
};

/// A planar shape, a flat cylinder, an abstract curvature tuple, or a shape
/// whose metrics fill the gaps of a partial tuple.
struct DomainSpec {
    std::variant<std::monostate, geometry::PlanarDomain, Cylinder> shape;
    CurvatureTuple curvature;
    std::optional<int> order;

    bool has_shape() const { return !std::holds_alternative<std::monostate>(shape); }
};

/// Inline grammar: `disk:R`, `ellipse:a,b`, `polygon:x1,y1;x2,y2;...`,
/// `cylinder:L,R`. Throws ValidationError on malformed input.
DomainSpec parse_inline_spec(std::string_view text);

/// Key-value document, one `key: value` per line, `#` comments:
///   shape: disk|ellipse|polygon|cylinder
///   radius | a, b | vertices: x1,y1; x2,y2; ... | circumference, half_height
///   order, dim, ricci, mean_curv, inner_radius (all optional)
/// Throws ValidationError on unknown keys, missing parameters, or a document
/// that names neither a shape nor a complete curvature tuple.
DomainSpec parse_spec_document(std::string_view text);

/// Canonical inline form of the shape (empty for a bare tuple).
std::string describe_shape(const DomainSpec& spec);

}  // namespace steklov::harness
