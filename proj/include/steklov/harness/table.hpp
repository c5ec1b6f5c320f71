// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace steklov::harness {

/// Axis values from `a,b,c` or an inclusive range `start:stop:step`.
/// Throws ValidationError on malformed input.
std::vector<double> parse_axis(std::string_view text);

struct TableGrid {
    std::vector<double> n;
    std::vector<double> K;
    std::vector<double> H;  // ignored when ball_mean_curvature is set
    std::vector<double> R;
    // H taken as the mean curvature of the ball of radius R in M_K.
    bool ball_mean_curvature = false;
};

/// Known column names, in documentation order.
const std::vector<std::string>& table_columns();

/// RFC 4180 CSV with LF endings: header `n,K,H,R,<columns>` and one row per
/// grid point in (n, K, H, R) lexicographic order. Inapplicable cells are
/// empty. Grid points are evaluated in parallel; output order is fixed.
/// Throws ValidationError for an empty grid or unknown column.
std::string render_table(const TableGrid& grid, const std::vector<std::string>& columns);

}  // namespace steklov::harness
