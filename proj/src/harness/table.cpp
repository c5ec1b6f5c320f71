// SPDX-License-Identifier: Apache-2.0
#include "steklov/harness/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <thread>

#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/harness/report_json.hpp"
#include "steklov/spaceform.hpp"

namespace steklov::harness {
namespace {

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

struct GridPoint {
    int n;
    double K, H, R;
};

using CellFn = std::function<std::optional<double>(const GridPoint&)>;

const std::vector<std::pair<std::string, CellFn>>& column_table() {
    using spaceform::ThetaProfile;
    static const std::vector<std::pair<std::string, CellFn>> cols = {
        {"mainBound",
         [](const GridPoint& g) -> std::optional<double> {
             return bounds::main_lower_bound(ThetaProfile(g.n, g.K, g.H), g.R);
         }},
        {"closedForm",
         [](const GridPoint& g) -> std::optional<double> {
             if (g.K == 0.0) return bounds::explicit_bound_k0(g.n, g.H, g.R);
             if (g.K == -1.0) return bounds::explicit_bound_kneg1(g.n, g.H, g.R);
             return std::nullopt;
         }},
        {"wangXia",
         [](const GridPoint& g) -> std::optional<double> {
             if (g.K >= 0.0 && g.H > 0.0) return g.n * g.H;
             return std::nullopt;
         }},
        {"innerRadius",
         [](const GridPoint& g) -> std::optional<double> {
             if (g.K >= 0.0 && g.H >= 0.0) return 1.0 / g.R;
             return std::nullopt;
         }},
        {"ballComparison",
         [](const GridPoint& g) -> std::optional<double> {
             return bounds::ball_comparison_bound(g.n, g.K, g.H).q1_bar;
         }},
        {"ballRatio",
         [](const GridPoint& g) -> std::optional<double> {
             return spaceform::ball_geometry(g.n, g.K, g.R).isoperimetric_ratio();
         }},
        {"chengUpper",
         [](const GridPoint& g) -> std::optional<double> { return bounds::cheng_upper_bound(g.n, g.K, g.R); }},
        {"mckean",
         [](const GridPoint& g) -> std::optional<double> {
             if (g.K == -1.0 && g.H >= 1.0) return bounds::mckean_bound(g.n);
             return std::nullopt;
         }},
        {"firstZero",
         [](const GridPoint& g) -> std::optional<double> {
             return spaceform::theta_first_zero(ThetaProfile(g.n, g.K, g.H));
         }},
        {"rough",
         [](const GridPoint& g) -> std::optional<double> {
             return bounds::rough_bound(ThetaProfile(g.n, g.K, g.H), g.R);
         }},
    };
    return cols;
}

}  // namespace

std::vector<double> parse_axis(std::string_view text) {
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        std::size_t start = 0;
        while (true) {
            const auto pos = text.find(':', start);
            parts.push_back(parse_double(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
        if (parts.size() != 3 || !(parts[2] > 0)) {
            throw ValidationError("range must be start:stop:step with step > 0");
        }
        const double span = (parts[1] - parts[0]) / parts[2];
        if (span < -1e-9) return out;
        const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        if (count > 1'000'000) throw ValidationError("range has too many points");
        for (std::size_t i = 0; i < count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const auto part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        out.push_back(parse_double(part));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : column_table()) v.push_back(name);
        return v;
    }();
    return names;
}

std::string render_table(const TableGrid& grid, const std::vector<std::string>& columns) {
    std::vector<const CellFn*> fns;
    for (const auto& name : columns) {
        const auto& table = column_table();
        const auto it = std::find_if(table.begin(), table.end(), [&](const auto& c) { return c.first == name; });
        if (it == table.end()) throw ValidationError("unknown column '" + name + "'");
        fns.push_back(&it->second);
    }
    if (fns.empty()) throw ValidationError("no columns selected");

    std::vector<double> hs = grid.ball_mean_curvature ? std::vector<double>{0.0} : grid.H;
    if (grid.n.empty() || grid.K.empty() || hs.empty() || grid.R.empty()) {
        throw ValidationError("grid is empty");
    }
    std::vector<GridPoint> points;
    for (double nv : grid.n) {
        if (nv != std::floor(nv) || nv < 2 || nv > 1000) throw ValidationError("dimension must be an integer >= 2");
        for (double K : grid.K) {
            for (double H : hs) {
                for (double R : grid.R) points.push_back({static_cast<int>(nv), K, H, R});
            }
        }
    }

    std::vector<std::string> rows(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < points.size(); idx = next++) {
            GridPoint g = points[idx];
            if (grid.ball_mean_curvature) {
                const auto sk = spaceform::sk_eval(g.K, g.R);
                g.H = sk.s_prime / sk.s;
            }
            std::string row = std::to_string(g.n) + "," + format_number(g.K) + "," + format_number(g.H) + "," +
                              format_number(g.R);
            for (const CellFn* fn : fns) {
                row += ",";
                try {
                    if (const auto v = (*fn)(g)) row += format_number(*v);
                } catch (const Error&) {
                    // Inapplicable at this grid point.
                }
            }
            rows[idx] = std::move(row) + "\n";
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::string out = "n,K,H,R";
    for (const auto& name : columns) out += "," + name;
    out += "\n";
    for (const auto& row : rows) out += row;
    return out;
}

}  // namespace steklov::harness
