// SPDX-License-Identifier: Apache-2.0
// steklov: bound reports, planar eigenvalue solves, verification and tables.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "steklov/bounds.hpp"
#include "steklov/eigensolver.hpp"
#include "steklov/errors.hpp"
#include "steklov/geometry2d.hpp"
#include "steklov/harness/domain_spec.hpp"
#include "steklov/harness/report_json.hpp"
#include "steklov/harness/table.hpp"
#include "steklov/spaceform.hpp"
#include "steklov/verify.hpp"

namespace {

using namespace steklov;
using harness::DomainSpec;
using harness::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

DomainSpec load_spec(const std::string& inline_spec, const std::string& file) {
    if (!inline_spec.empty() && !file.empty()) throw ValidationError("--domain and --domain-file are exclusive");
    if (!inline_spec.empty()) return harness::parse_inline_spec(inline_spec);
    if (file.empty()) return {};
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot read domain file: " + file);
    std::stringstream text;
    text << in.rdbuf();
    return harness::parse_spec_document(text.str());
}

struct BoundArgs {
    std::optional<int> dim;
    std::optional<double> ricci, mean_curv, inner_radius, area, perimeter, width;
    std::string domain, domain_file;
};

int run_bound(const BoundArgs& a) {
    const DomainSpec spec = load_spec(a.domain, a.domain_file);
    auto pick = [](const auto& flag, const auto& doc) { return flag ? flag : doc; };
    std::optional<int> n = pick(a.dim, spec.curvature.n);
    std::optional<double> K = pick(a.ricci, spec.curvature.K);
    std::optional<double> H = pick(a.mean_curv, spec.curvature.H);
    std::optional<double> R = pick(a.inner_radius, spec.curvature.R);
    bounds::ReportExtras extras{a.area, a.perimeter, a.width, false};

    if (const auto* planar = std::get_if<geometry::PlanarDomain>(&spec.shape)) {
        const auto m = geometry::domain_metrics(*planar);
        n = n.value_or(2);
        K = K.value_or(0.0);
        H = H.value_or(m.min_curvature);
        R = R.value_or(m.inner_radius);
        if (!extras.area) extras.area = m.area;
        if (!extras.perimeter) extras.perimeter = m.perimeter;
        if (!extras.width) extras.width = m.min_width;
        extras.smoothness_caveat = planar->is_polygon();
    } else if (const auto* cyl = std::get_if<harness::Cylinder>(&spec.shape)) {
        n = n.value_or(2);
        K = K.value_or(0.0);
        H = H.value_or(0.0);
        R = R.value_or(cyl->half_height);
        if (!extras.area) extras.area = 2.0 * cyl->half_height * cyl->circumference;
        if (!extras.perimeter) extras.perimeter = 2.0 * cyl->circumference;
    }
    if (!n || !K || !H || !R) {
        throw ValidationError("bound needs --dim, --ricci, --mean-curv and --inner-radius (or a domain)");
    }
    const auto report = bounds::bound_report(spaceform::ThetaProfile(*n, *K, *H), *R, extras);
    std::cout << harness::dump_line(harness::to_json(report));
    return kOk;
}

int run_solve(const std::string& domain, const std::string& domain_file, int degree) {
    const DomainSpec spec = load_spec(domain, domain_file);
    if (!spec.has_shape()) throw ValidationError("solve needs a planar or cylinder domain");
    if (degree < 0) throw ValidationError("--degree must be non-negative");
    const int previous = std::max(degree - 5, 0);
    Json out;
    out["domain"] = harness::describe_shape(spec);

    if (const auto* cyl = std::get_if<harness::Cylinder>(&spec.shape)) {
        const auto top = solver::cylinder_q1(cyl->circumference, cyl->half_height, degree);
        const auto prev = solver::cylinder_q1(cyl->circumference, cyl->half_height, previous);
        const double R = cyl->half_height;
        out["q1"] = harness::json_number(top.q1);
        out["lower"] = harness::json_number(bounds::main_lower_bound(spaceform::ThetaProfile(2, 0.0, 0.0), R));
        out["upper"] = harness::json_number(1.0 / R);
        out["degree"] = degree;
        out["residual"] = harness::json_number(std::abs(top.q1 - prev.q1));
        std::cout << harness::dump_line(out);
        return kOk;
    }

    const auto& planar = std::get<geometry::PlanarDomain>(spec.shape);
    const int order = spec.order.value_or(solver::default_quadrature_order(degree));
    const auto ruled = geometry::build_quadrature(planar, order);
    const auto center = ruled.centroid();
    const double scale = ruled.max_distance_from(center);
    const double q = *solver::solve_q1(solver::assemble(ruled, degree, center, scale)).q1;
    const double q_prev = *solver::solve_q1(solver::assemble(ruled, previous, center, scale)).q1;
    const auto m = geometry::domain_metrics(planar);
    out["q1"] = harness::json_number(q);
    out["lower"] = harness::json_number(
        bounds::main_lower_bound(spaceform::ThetaProfile(2, 0.0, m.min_curvature), m.inner_radius));
    out["upper"] = harness::json_number(m.perimeter / m.area);
    out["degree"] = degree;
    out["residual"] = harness::json_number(std::abs(q - q_prev));
    if (planar.is_polygon()) out["smoothnessCaveat"] = true;
    std::cout << harness::dump_line(out);
    return kOk;
}

int run_verify(const std::string& suite_name) {
    const auto suite = verify::parse_suite(suite_name);
    if (!suite) {
        std::cerr << "steklov: unknown suite '" << suite_name << "' (spaceform|bounds|solver|harness|all)\n";
        return kUsage;
    }
    const auto results = verify::run_suite(*suite);
    std::cout << verify::format_results(results);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    if (failed == 0) return kOk;
    for (const auto& r : results) {
        if (!r.passed) std::cerr << "failed: " << r.id << ": " << r.detail << "\n";
    }
    return kVerifyFailed;
}

struct TableArgs {
    std::vector<std::string> grid;
    std::string dim, ricci, mean_curv, inner_radius;
    std::string columns = "mainBound";
};

int run_table(const TableArgs& a) {
    std::string dim = a.dim, ricci = a.ricci, mean_curv = a.mean_curv, inner = a.inner_radius;
    for (const auto& entry : a.grid) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw ValidationError("--grid expects axis=values, got '" + entry + "'");
        const std::string axis = entry.substr(0, eq);
        const std::string values = entry.substr(eq + 1);
        if (axis == "n") dim = values;
        else if (axis == "K") ricci = values;
        else if (axis == "H") mean_curv = values;
        else if (axis == "R") inner = values;
        else throw ValidationError("unknown grid axis '" + axis + "' (n|K|H|R)");
    }
    if (dim.empty() || ricci.empty() || mean_curv.empty() || inner.empty()) {
        throw ValidationError("table needs values for all of n, K, H and R");
    }
    harness::TableGrid grid;
    grid.n = harness::parse_axis(dim);
    grid.K = harness::parse_axis(ricci);
    grid.ball_mean_curvature = mean_curv == "ball";
    if (!grid.ball_mean_curvature) grid.H = harness::parse_axis(mean_curv);
    grid.R = harness::parse_axis(inner);

    std::vector<std::string> columns;
    std::stringstream ss(a.columns);
    for (std::string c; std::getline(ss, c, ',');) {
        if (!c.empty()) columns.push_back(c);
    }
    std::cout << harness::render_table(grid, columns);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biharmonic Steklov eigenvalue bounds and planar solver"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Print the bound report for curvature data as JSON");
    bound->add_option("--dim", bound_args.dim, "Dimension n >= 2");
    bound->add_option("--ricci", bound_args.ricci, "Space form curvature K");
    bound->add_option("--mean-curv", bound_args.mean_curv, "Lower bound H for the boundary mean curvature");
    bound->add_option("--inner-radius", bound_args.inner_radius, "Inner radius R");
    bound->add_option("--area", bound_args.area, "Volume of Omega (area when n = 2)");
    bound->add_option("--perimeter", bound_args.perimeter, "Boundary measure |dOmega|");
    bound->add_option("--width", bound_args.width, "Minimal width");
    bound->add_option("--domain", bound_args.domain, "Inline domain spec; its metrics fill missing flags");
    bound->add_option("--domain-file", bound_args.domain_file, "Domain spec document");

    std::string solve_domain, solve_file;
    int degree = 20;
    auto* solve = app.add_subcommand("solve", "Compute q1 with its bounds on a planar domain or flat cylinder");
    solve->add_option("--domain", solve_domain, "disk:R | ellipse:a,b | polygon:x,y;... | cylinder:L,R");
    solve->add_option("--domain-file", solve_file, "Domain spec document");
    solve->add_option("--degree", degree, "Harmonic polynomial degree (cylinder: highest mode)")->capture_default_str();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run property checks and acceptance criteria");
    verify_cmd->add_option("--suite", suite, "spaceform | bounds | solver | harness | all")->capture_default_str();

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print a CSV table of bounds over a parameter grid");
    table->add_option("--grid", table_args.grid, "Axis values, e.g. R=0.1:1:0.1 or K=-1,0,1 (repeatable)");
    table->add_option("--dim", table_args.dim, "Values of n");
    table->add_option("--ricci", table_args.ricci, "Values of K");
    table->add_option("--mean-curv", table_args.mean_curv, "Values of H, or 'ball'");
    table->add_option("--inner-radius", table_args.inner_radius, "Values of R");
    table->add_option("--columns", table_args.columns, "Comma separated columns")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*bound) return run_bound(bound_args);
        if (*solve) return run_solve(solve_domain, solve_file, degree);
        if (*verify_cmd) return run_verify(suite);
        if (*table) return run_table(table_args);
    } catch (const steklov::Error& e) {
        std::cerr << "steklov: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
