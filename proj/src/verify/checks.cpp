// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "steklov/bounds.hpp"
#include "steklov/eigensolver.hpp"
#include "steklov/errors.hpp"
#include "steklov/geometry2d.hpp"
#include "steklov/harness/report_json.hpp"
#include "steklov/harness/table.hpp"
#include "steklov/oracles.hpp"
#include "steklov/spaceform.hpp"
#include "steklov/verify.hpp"

namespace steklov::verify {

using geometry::PlanarDomain;
using geometry::Point;
using spaceform::ThetaProfile;

namespace {

constexpr double kPi = std::numbers::pi;

// Outcome of one check body: pass flag plus a short numeric summary.
struct Outcome {
    bool passed;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckResult run_check(std::string id, std::string title, const std::function<Outcome()>& body,
                      double time_limit = 0.0) {
    CheckResult r{std::move(id), std::move(title), false, {}, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome o = body();
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0 && r.seconds >= time_limit) {
        r.passed = false;
        r.detail += " (runtime " + sci(r.seconds) + " s exceeds " + sci(time_limit) + " s)";
    }
    return r;
}

// Tracks the worst deviation seen against a tolerance.
struct MaxError {
    double worst = 0.0;
    bool ok = true;
    void add(double err, double tol) {
        if (!(err <= tol)) ok = false;
        worst = std::max(worst, std::isnan(err) ? INFINITY : err);
    }
    Outcome outcome(const std::string& label = "max err") const { return {ok, label + " " + sci(worst)}; }
};

struct CorpusEntry {
    std::string name;
    PlanarDomain domain;
};

std::vector<CorpusEntry> corpus() {
    return {
        {"disk(1)", PlanarDomain::disk(1.0)},
        {"ellipse(2,1)", PlanarDomain::ellipse(2.0, 1.0)},
        {"ellipse(3,1)", PlanarDomain::ellipse(3.0, 1.0)},
        {"unit square", PlanarDomain::polygon({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}})},
        {"regular hexagon", PlanarDomain::regular_polygon(6, 1.0)},
    };
}

// Triangle with incircle the unit disk: vertices at distance 2 from the center.
PlanarDomain circumscribed_triangle() { return PlanarDomain::regular_polygon(3, 2.0, kPi / 2.0); }

std::vector<Point> random_convex_polygon(std::mt19937_64& rng, int sides) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> angles;
    for (int i = 0; i < sides; ++i) angles.push_back(2.0 * kPi * unit(rng));
    std::sort(angles.begin(), angles.end());
    const double ax = 0.5 + unit(rng);
    const double by = 0.5 + unit(rng);
    std::vector<Point> v;
    for (double t : angles) v.push_back({ax * std::cos(t), by * std::sin(t)});
    return v;
}

double sandwich_lower(const geometry::DomainMetrics& m) {
    return bounds::main_lower_bound(ThetaProfile(2, 0.0, m.min_curvature), m.inner_radius);
}

// ---------------------------------------------------------------- spaceform

std::vector<CheckResult> spaceform_properties() {
    std::vector<CheckResult> out;

    out.push_back(run_check("spaceform.ball-identity", "1/int Theta equals the ball isoperimetric ratio", [] {
        MaxError e;
        for (int n = 2; n <= 5; ++n) {
            for (double K : {-1.0, 0.0, 1.0}) {
                for (double R : {0.05, 0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
                    const double lhs = 1.0 / spaceform::theta_integral(spaceform::ball_profile(n, K, R), R);
                    const double rhs = spaceform::ball_geometry(n, K, R).isoperimetric_ratio();
                    e.add(std::abs(lhs - rhs), 1e-8);
                }
            }
        }
        return e.outcome();
    }));

    out.push_back(run_check("spaceform.theta-positivity", "Theta > 0 before its first zero and 0 at it", [] {
        bool ok = true;
        double worst_zero = 0.0;
        for (int n = 2; n <= 5; ++n) {
            for (const auto& [K, H] : {std::pair{0.0, 1.0}, {0.0, 3.0}, {1.0, -2.0}, {1.0, 0.0}, {1.0, 4.0},
                                      {-1.0, 1.5}, {-1.0, 5.0}, {4.0, 0.5}, {-0.25, 0.75}}) {
                const ThetaProfile p(n, K, H);
                const double zero = spaceform::theta_first_zero(p);
                for (int i = 0; i < 200; ++i) ok = ok && spaceform::theta_eval(p, zero * i / 200.0) > 0;
                worst_zero = std::max(worst_zero, std::abs(spaceform::theta_eval(p, zero)));
            }
        }
        return Outcome{ok && worst_zero <= 1e-10, "max |Theta(first zero)| " + sci(worst_zero)};
    }));

    out.push_back(run_check("spaceform.branch-continuity", "s_K branches agree as K -> 0", [] {
        // The exact gap is |K| r^3/6 to leading order, 1.7e-8 at r = 10, so the
        // 1e-8 tolerance is applied relative to max(1, s).
        MaxError e, taylor;
        for (int i = 0; i <= 100; ++i) {
            const double r = 0.1 * i;
            const double flat = spaceform::sk_eval(0.0, r).s;
            const double scale = std::max(1.0, flat);
            const double up = spaceform::sk_eval(1e-10, r).s - flat;
            const double down = spaceform::sk_eval(-1e-10, r).s - flat;
            e.add(std::abs(up) / scale, 1e-8);
            e.add(std::abs(down) / scale, 1e-8);
            const double gap = 1e-10 * r * r * r / 6.0;
            taylor.add(std::abs(up + gap), 1e-15 + 1e-6 * gap);
            taylor.add(std::abs(down - gap), 1e-15 + 1e-6 * gap);
        }
        return Outcome{e.ok && taylor.ok, "max rel gap " + sci(e.worst) + ", max dev from r^3/6 law " + sci(taylor.worst)};
    }));

    out.push_back(run_check("spaceform.integral-monotone", "int_0^R Theta strictly increasing on (0, first zero)", [] {
        bool ok = true;
        for (const auto& [K, H] : {std::pair{0.0, 1.0}, {1.0, 0.0}, {-1.0, 2.0}, {-1.0, -1.0}, {2.0, -1.0}}) {
            for (int n = 2; n <= 5; ++n) {
                const ThetaProfile p(n, K, H);
                const double top = std::min(spaceform::theta_first_zero(p), 3.0);
                double prev = 0.0;
                for (int i = 1; i <= 50; ++i) {
                    const double v = spaceform::theta_integral(p, top * i / 50.0);
                    ok = ok && v > prev;
                    prev = v;
                }
            }
        }
        return Outcome{ok, ok ? "strictly increasing on all samples" : "non-increasing sample found"};
    }));

    out.push_back(run_check("spaceform.oracles", "s_K, first zero, integral and ball volume against independent oracles", [] {
        MaxError e;
        for (double r : {0.1, 0.5, 1.0, 2.0, 3.0}) {
            const auto v = spaceform::sk_eval(-1.0, r);
            e.add(std::abs(v.s - oracles::sinh_series(r)) / oracles::cosh_series(r), 1e-13);
            e.add(std::abs(v.s_prime - oracles::cosh_series(r)) / oracles::cosh_series(r), 1e-13);
        }
        for (const auto& [K, H] : {std::pair{1.0, 0.3}, {1.0, -2.0}, {-1.0, 2.0}, {0.0, 2.0}, {3.0, 1.0}, {-2.0, 5.0}}) {
            const ThetaProfile p(2, K, H);
            const double zero = spaceform::theta_first_zero(p);
            const double hi = K > 0 ? kPi / std::sqrt(K) * (1 - 1e-12) : 50.0;
            const double ref = oracles::bisect(
                [&](double r) {
                    const auto v = spaceform::sk_eval(K, r);
                    return v.s_prime - H * v.s;
                },
                0.0, hi);
            e.add(std::abs(zero - ref), 1e-12);
        }
        for (int n = 2; n <= 5; ++n) {
            for (const auto& [K, H] : {std::pair{1.0, 0.0}, {-1.0, 0.5}, {-1.0, -1.0}, {0.5, 2.0}}) {
                const ThetaProfile p(n, K, H);
                const double R = std::min(1.2, spaceform::theta_first_zero(p));
                const double ref = oracles::simpson([&](double r) { return spaceform::theta_eval(p, r); }, 0.0, R);
                e.add(std::abs(spaceform::theta_integral(p, R) - ref), 1e-10);
            }
            for (double K : {-1.0, 0.0, 1.0}) {
                const double R = 0.8;
                const double omega = oracles::sphere_area_recursive(n - 1);
                const double vol = omega * oracles::simpson(
                                               [&](double t) { return std::pow(spaceform::sk_eval(K, t).s, n - 1); }, 0.0, R);
                const auto ball = spaceform::ball_geometry(n, K, R);
                e.add(std::abs(ball.volume - vol) / vol, 1e-11);
                e.add(std::abs(spaceform::unit_sphere_area(n - 1) - omega) / omega, 1e-13);
            }
        }
        return e.outcome();
    }));
    return out;
}

// ------------------------------------------------------------------- bounds

std::vector<CheckResult> bounds_properties() {
    std::vector<CheckResult> out;

    out.push_back(run_check("bounds.wang-xia-dominance", "main bound >= nH, equality only at RH = 1", [] {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> h_dist(0.05, 10.0), t_dist(0.01, 0.999);
        bool ok = true;
        double worst_eq = 0.0;
        for (int i = 0; i < 400; ++i) {
            const int n = 2 + i % 4;
            const double H = h_dist(rng);
            const double R = t_dist(rng) / H;
            ok = ok && bounds::main_lower_bound(ThetaProfile(n, 0.0, H), R) > n * H;
            const double eq = bounds::main_lower_bound(ThetaProfile(n, 0.0, H), 1.0 / H);
            worst_eq = std::max(worst_eq, std::abs(eq - n * H));
        }
        return Outcome{ok && worst_eq <= 1e-10, "max |bound - nH| at RH=1: " + sci(worst_eq)};
    }));

    out.push_back(run_check("bounds.payne-dominance", "1/R >= 2/w whenever w >= 2R", [] {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> r_dist(0.01, 5.0), f_dist(2.0, 6.0);
        bool ok = true;
        for (int i = 0; i < 500; ++i) {
            const double R = r_dist(rng);
            const auto c = bounds::classical_bounds(2, 0.0, R, f_dist(rng) * R);
            ok = ok && c.inner_radius_dominates_payne.value_or(false) && c.inner_radius >= *c.payne;
        }
        return Outcome{ok, "500 random (R, w) pairs"};
    }));

    out.push_back(run_check("bounds.closed-form-k0", "explicit K=0 bound equals the main bound", [] {
        MaxError e;
        for (int n = 2; n <= 5; ++n) {
            for (double H : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
                for (double R : {0.05, 0.1, 0.2, 0.3, 0.45}) {
                    const double a = bounds::explicit_bound_k0(n, H, R);
                    const double b = bounds::main_lower_bound(ThetaProfile(n, 0.0, H), R);
                    e.add(std::abs(a - b), 1e-12);
                }
            }
        }
        return e.outcome();
    }));

    out.push_back(run_check("bounds.kneg1-ordering", "K=-1 closed forms never exceed the main bound", [] {
        bool ok = true;
        double worst_eq = 0.0;
        for (int n = 2; n <= 5; ++n) {
            for (double H : {-2.0, -0.5, 0.0, 0.5, 0.99, 1.0, 1.5, 3.0}) {
                const ThetaProfile p(n, -1.0, H);
                const double zero = spaceform::theta_first_zero(p);
                for (double R : {0.05, 0.2, 0.5, 1.0, 2.0, 4.0}) {
                    if (R > zero) continue;
                    const double closed = bounds::explicit_bound_kneg1(n, H, R);
                    const double main = bounds::main_lower_bound(p, R);
                    ok = ok && closed <= main + 1e-9;
                    if (H == 1.0) worst_eq = std::max(worst_eq, std::abs(closed - main));
                }
            }
        }
        return Outcome{ok && worst_eq <= 1e-8, "max gap at H=1: " + sci(worst_eq)};
    }));

    out.push_back(run_check("bounds.mckean-limit", "H=1 hyperbolic bound decreases strictly to n-1", [] {
        // Once m e^{-mR} drops below half an ulp of n-1 the bound rounds to n-1
        // exactly; strictness is only asserted where doubles can resolve it.
        bool ok = true;
        double worst = 0.0;
        for (int n = 2; n <= 6; ++n) {
            const double m = n - 1.0;
            double prev = INFINITY;
            for (double R : {1.0, 10.0, 100.0}) {
                const double b = bounds::explicit_bound_kneg1(n, 1.0, R);
                const double excess = m * std::exp(-m * R);
                const bool resolvable = excess > m * std::numeric_limits<double>::epsilon();
                ok = ok && (resolvable ? b < prev && b > m : b <= prev && b == m);
                prev = b;
            }
            ok = ok && prev >= bounds::mckean_bound(n);
            worst = std::max(worst, prev - m);
        }
        return Outcome{ok && worst <= 1e-12, "max bound(R=100) - (n-1): " + sci(worst)};
    }));

    out.push_back(run_check("bounds.sharpness", "main bound equals the Cheng model value on balls", [] {
        MaxError e;
        for (int n = 2; n <= 5; ++n) {
            for (double K : {-1.0, 0.0, 1.0}) {
                for (double R : {0.2, 0.7, 1.3, 2.1}) {
                    e.add(std::abs(bounds::main_lower_bound(spaceform::ball_profile(n, K, R), R) -
                                   bounds::cheng_upper_bound(n, K, R)),
                          1e-8);
                }
            }
        }
        return e.outcome();
    }));

    out.push_back(run_check("bounds.report", "report invariants: positive lower bound below the isoperimetric ratio", [] {
        bool ok = true;
        const auto disk = bounds::bound_report(ThetaProfile(2, 0.0, 1.0), 1.0, {kPi, 2.0 * kPi, 2.0});
        ok = ok && std::abs(disk.q1_lower - 2.0) < 1e-12 && disk.sandwich_consistent.value_or(false);
        const auto ell = bounds::bound_report(ThetaProfile(2, 0.0, 0.25), 1.0,
                                              {2.0 * kPi, oracles::ellipse_perimeter_elliptic(2.0, 1.0), 2.0});
        ok = ok && ell.q1_lower > 0 && ell.q1_lower <= *ell.isoperimetric_upper + 1e-9;
        const auto hyp = bounds::bound_report(ThetaProfile(3, -1.0, 1.2), 0.4);
        ok = ok && hyp.q1_lower > 0 && hyp.mckean && hyp.ball_comparison;
        return Outcome{ok, "disk, ellipse, hyperbolic reports"};
    }));
    return out;
}

// ------------------------------------------------------------------- solver

std::vector<CheckResult> solver_properties() {
    std::vector<CheckResult> out;

    out.push_back(run_check("geometry.quadrature", "weight sums and disk moment against closed forms", [] {
        MaxError e;
        const auto disk = geometry::build_quadrature(PlanarDomain::disk(1.0), 8);
        double moment = 0.0;
        for (const auto& nd : disk.interior_quadrature()) moment += nd.weight * dot(nd.point, nd.point);
        e.add(std::abs(moment - kPi / 2.0), 1e-10);
        for (const auto& entry : corpus()) {
            const auto d = geometry::build_quadrature(entry.domain, 8);
            const auto m = geometry::domain_metrics(d);
            double area = 0.0, perimeter = 0.0;
            for (const auto& nd : d.interior_quadrature()) area += nd.weight;
            for (const auto& nd : d.boundary_quadrature()) perimeter += nd.weight;
            e.add(std::abs(area - m.area) / m.area, 1e-10);
            e.add(std::abs(perimeter - m.perimeter) / m.perimeter, 1e-10);
        }
        return e.outcome("max rel err");
    }));

    out.push_back(run_check("geometry.incenter", "Chebyshev center of a triangle is its incenter", [] {
        std::mt19937_64 rng(3);
        MaxError e;
        for (int i = 0; i < 100; ++i) {
            auto v = random_convex_polygon(rng, 3);
            const auto ref = oracles::triangle_incircle(v[0], v[1], v[2]);
            const auto lp = geometry::chebyshev_center({v});
            e.add(std::abs(lp.radius - ref.radius), 1e-10);
            e.add(std::hypot(lp.center.x - ref.center.x, lp.center.y - ref.center.y), 1e-10);
        }
        return e.outcome();
    }));

    out.push_back(run_check("geometry.inradius-grid", "LP inner radius within 2 grid cells of a 400x400 scan", [] {
        std::mt19937_64 rng(5);
        std::vector<std::vector<Point>> polys;
        for (const auto& entry : corpus()) {
            if (const auto* p = std::get_if<geometry::ConvexPolygon>(&entry.domain.shape())) polys.push_back(p->vertices);
        }
        polys.push_back(std::get<geometry::ConvexPolygon>(circumscribed_triangle().shape()).vertices);
        for (int i = 0; i < 5; ++i) polys.push_back(random_convex_polygon(rng, 5 + 3 * i));
        bool ok = true;
        double worst_cells = 0.0;
        for (const auto& v : polys) {
            const auto grid = oracles::grid_inradius(v);
            const double lp = geometry::chebyshev_center({v}).radius;
            const double cells = std::abs(lp - grid.radius) / grid.spacing;
            ok = ok && cells <= 2.0 && lp >= grid.radius - 1e-12;
            worst_cells = std::max(worst_cells, cells);
        }
        return Outcome{ok, "max deviation " + sci(worst_cells) + " cells"};
    }));

    out.push_back(run_check("geometry.width", "rotating calipers against brute force; hexagon width sqrt(3)", [] {
        MaxError e;
        const auto hex = std::get<geometry::ConvexPolygon>(PlanarDomain::regular_polygon(6, 1.0).shape());
        e.add(std::abs(geometry::min_width(hex) - std::sqrt(3.0)), 1e-12);
        std::mt19937_64 rng(9);
        for (int i = 0; i < 100; ++i) {
            const auto v = random_convex_polygon(rng, 3 + i % 20);
            e.add(std::abs(geometry::min_width({v}) - oracles::brute_force_width(v)), 1e-12);
        }
        return e.outcome();
    }));

    out.push_back(run_check("geometry.ellipse-perimeter", "arclength quadrature against 4aE(e)", [] {
        MaxError e;
        for (const auto& [a, b] : {std::pair{2.0, 1.0}, {3.0, 1.0}, {1.0, 1.0}, {10.0, 0.1}}) {
            e.add(std::abs(geometry::ellipse_perimeter(a, b) - oracles::ellipse_perimeter_elliptic(a, b)), 1e-10);
        }
        return e.outcome();
    }));

    out.push_back(run_check("solver.ball-equality", "q1(disk of radius r) = 2/r", [] {
        MaxError e;
        for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            e.add(std::abs(*solver::solve_domain(PlanarDomain::disk(r), 10).q1 - 2.0 / r), 1e-8);
        }
        return e.outcome();
    }));

    out.push_back(run_check("solver.monotone", "q1 non-increasing in the degree (nested trial spaces)", [] {
        bool ok = true;
        double worst = 0.0;
        for (const auto& entry : corpus()) {
            const int top = 24;
            const auto d = geometry::build_quadrature(entry.domain, solver::default_quadrature_order(top));
            const Point c = d.centroid();
            const double scale = d.max_distance_from(c);
            double prev = INFINITY;
            for (int N = 0; N <= top; ++N) {
                const double q = *solver::solve_q1(solver::assemble(d, N, c, scale)).q1;
                worst = std::max(worst, q - prev);
                ok = ok && q <= prev + 1e-12 * std::max(1.0, prev);
                prev = q;
            }
        }
        return Outcome{ok, "max increase " + sci(worst)};
    }));

    out.push_back(run_check("solver.scale-covariance", "q1(2 Omega) = q1(Omega)/2 on the ellipse", [] {
        const auto base = PlanarDomain::ellipse(2.0, 1.0);
        const double q = *solver::solve_domain(base, 30).q1;
        const double q2 = *solver::solve_domain(base.scaled(2.0), 30).q1;
        const double rel = std::abs(q2 * 2.0 - q) / q;
        return Outcome{rel <= 1e-8, "rel err " + sci(rel)};
    }));
    return out;
}

// ------------------------------------------------------------------ harness

std::vector<CheckResult> harness_properties() {
    std::vector<CheckResult> out;
    auto reports = [] {
        return std::vector<bounds::BoundReport>{
            bounds::bound_report(ThetaProfile(2, 0.0, 1.0), 1.0, {kPi, 2.0 * kPi, 2.0}),
            bounds::bound_report(ThetaProfile(3, -1.0, 1.0), 2.0),
            bounds::bound_report(ThetaProfile(4, 1.0, -0.3), 0.5),
            bounds::bound_report(ThetaProfile(2, 0.0, 0.0), 1.0, {std::nullopt, std::nullopt, 3.0, true}),
        };
    };

    out.push_back(run_check("harness.json-roundtrip", "parse then re-serialize is idempotent", [&] {
        bool ok = true;
        for (const auto& r : reports()) {
            const std::string text = harness::dump_line(harness::to_json(r));
            ok = ok && harness::dump_line(harness::Json::parse(text)) == text;
        }
        return Outcome{ok, "4 reports"};
    }));

    out.push_back(run_check("harness.deterministic", "identical inputs give byte-identical output", [&] {
        const auto a = reports();
        const auto b = reports();
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            ok = ok && harness::to_json(a[i]).dump() == harness::to_json(b[i]).dump();
        }
        harness::TableGrid grid{{2, 3, 4}, {-1, 0, 1}, {}, harness::parse_axis("0.1:1.0:0.1"), true};
        ok = ok && harness::render_table(grid, harness::table_columns()) ==
                       harness::render_table(grid, harness::table_columns());
        return Outcome{ok, "reports and a 90-row table"};
    }));

    out.push_back(run_check("harness.provenance", "every reported bound carries a provenance tag", [&] {
        bool ok = true;
        for (const auto& r : reports()) {
            const auto j = harness::to_json(r);
            std::vector<std::string> tagged;
            for (const auto& p : j["provenance"]) tagged.push_back(p["bound"]);
            auto has = [&](const std::string& k) { return std::find(tagged.begin(), tagged.end(), k) != tagged.end(); };
            for (const char* key : {"q1Lower", "q1LowerClosedForm", "ballComparison", "innerRadiusBound", "rough",
                                    "mckean", "chengUpper", "isoperimetricUpper"}) {
                if (j.contains(key)) ok = ok && has(key);
            }
            for (const char* key : {"payne", "wangXia"}) {
                if (j["classical"].contains(key)) ok = ok && has(key);
            }
        }
        return Outcome{ok, "4 reports"};
    }));
    return out;
}

// --------------------------------------------------------------- acceptance

struct Criterion {
    const char* id;
    Suite suite;
    std::function<CheckResult()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"AC1", Suite::spaceform,
         [] {
             return run_check(
                 "AC1", "ball sharpness: main bound = ball isoperimetric ratio (36 points, 1e-8)",
                 [] {
                     MaxError e;
                     for (int n = 2; n <= 5; ++n) {
                         for (double K : {-1.0, 0.0, 1.0}) {
                             for (double R : {0.3, 0.6, 0.9}) {
                                 const double bound = bounds::main_lower_bound(spaceform::ball_profile(n, K, R), R);
                                 e.add(std::abs(bound - spaceform::ball_geometry(n, K, R).isoperimetric_ratio()), 1e-8);
                             }
                         }
                     }
                     return e.outcome();
                 },
                 1.0);
         }},
        {"AC2", Suite::solver,
         [] {
             return run_check(
                 "AC2", "disk eigensolver: q1(unit disk) = 2 within 1e-8 at degree 10",
                 [] {
                     const double q = *solver::solve_domain(PlanarDomain::disk(1.0), 10).q1;
                     return Outcome{std::abs(q - 2.0) <= 1e-8, "|q1 - 2| = " + sci(std::abs(q - 2.0))};
                 },
                 1.0);
         }},
        {"AC3", Suite::solver,
         [] {
             return run_check("AC3", "sandwich: main bound <= q1 <= |bd|/|Omega| on 5 convex domains", [] {
                 bool ok = true;
                 std::ostringstream detail;
                 for (const auto& entry : corpus()) {
                     const auto model = solver::solve_domain(entry.domain, 30);
                     const auto m = geometry::domain_metrics(entry.domain);
                     const double tol = entry.domain.is_polygon() ? 1e-4 : 1e-8;
                     const double lo = sandwich_lower(m);
                     const double hi = m.perimeter / m.area;
                     const double q = *model.q1;
                     const bool pass = lo - tol <= q && q <= hi + tol;
                     ok = ok && pass;
                     detail << entry.name << " " << sci(lo) << "<=" << sci(q) << "<=" << sci(hi) << (pass ? "; " : " FAIL; ");
                 }
                 return Outcome{ok, detail.str()};
             });
         }},
        {"AC4", Suite::bounds,
         [] {
             return run_check("AC4", "Wang-Xia refinement: main bound >= nH on 100 points, equality at RH=1", [] {
                 bool ok = true;
                 double worst_eq = 0.0;
                 int points = 0;
                 for (int n = 2; n <= 5; ++n) {
                     for (double H : {0.5, 1.0, 2.0, 4.0, 8.0}) {
                         for (double t : {0.2, 0.4, 0.6, 0.8, 1.0}) {
                             ++points;
                             const double bound = bounds::main_lower_bound(ThetaProfile(n, 0.0, H), t / H);
                             if (t == 1.0) {
                                 worst_eq = std::max(worst_eq, std::abs(bound - n * H));
                             } else {
                                 ok = ok && bound > n * H;
                             }
                         }
                     }
                 }
                 return Outcome{ok && worst_eq <= 1e-10 && points == 100,
                                std::to_string(points) + " points, max |bound - nH| at RH=1: " + sci(worst_eq)};
             });
         }},
        {"AC5", Suite::solver,
         [] {
             return run_check("AC5", "Payne comparison on the circumscribed equilateral triangle", [] {
                 const auto tri = circumscribed_triangle();
                 const auto m = geometry::domain_metrics(tri);
                 const double w = *m.min_width;
                 const bool ok = std::abs(m.inner_radius - 1.0) <= 1e-9 && std::abs(w - 3.0) <= 1e-9 &&
                                 1.0 / m.inner_radius > 2.0 / w;
                 return Outcome{ok, "R = " + sci(m.inner_radius) + ", w = " + sci(w)};
             });
         }},
        {"AC6", Suite::solver,
         [] {
             return run_check("AC6", "flat cylinder: q1 = 1/R on a 5x5 grid; mode-0 pencil {1, 3}", [] {
                 MaxError e;
                 bool modes_ok = true;
                 for (double L : {1.0, kPi, 2.0 * kPi, 10.0, 100.0}) {
                     for (double R : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                         const auto spec = solver::cylinder_q1(L, R, 8);
                         e.add(std::abs(spec.q1 - 1.0 / R), 1e-10);
                         for (std::size_t m = 1; m < spec.per_mode_minima.size(); ++m) {
                             modes_ok = modes_ok && spec.per_mode_minima[m] >= 1.0 / R - 1e-12;
                         }
                     }
                 }
                 const auto [b, i] = solver::cylinder_mode0_pencil(1.0);
                 const auto [l1, l2] = solver::pencil_eigenvalues(b, i);
                 e.add(std::abs(l1 - 1.0), 1e-12);
                 e.add(std::abs(l2 - 3.0), 1e-12);
                 return Outcome{e.ok && modes_ok, "max err " + sci(e.worst)};
             });
         }},
        {"AC7", Suite::bounds,
         [] {
             return run_check("AC7", "hemisphere bound: 1 for n=2, 4/pi for n=3", [] {
                 MaxError e;
                 e.add(std::abs(bounds::ball_comparison_bound(2, 1.0, 0.0).q1_bar - 1.0), 1e-10);
                 const double ref = 2.0 * oracles::sphere_area_recursive(2) / oracles::sphere_area_recursive(3);
                 e.add(std::abs(ref - 4.0 / kPi), 1e-14);
                 e.add(std::abs(bounds::ball_comparison_bound(3, 1.0, 0.0).q1_bar - ref), 1e-10);
                 return e.outcome();
             });
         }},
        {"AC8", Suite::bounds,
         [] {
             return run_check("AC8", "McKean: H=1 bound exceeds n-1 and is within 1e-8 of it at R=20/(n-1)", [] {
                 bool ok = true;
                 double worst = 0.0;
                 for (int n = 2; n <= 5; ++n) {
                     const double m = n - 1.0;
                     const ThetaProfile p(n, -1.0, 1.0);
                     for (double R : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0 / m}) {
                         ok = ok && bounds::explicit_bound_kneg1(n, 1.0, R) > m && bounds::main_lower_bound(p, R) > m;
                     }
                     const double far = std::max(bounds::explicit_bound_kneg1(n, 1.0, 20.0 / m),
                                                 bounds::main_lower_bound(p, 20.0 / m));
                     worst = std::max(worst, far - m);
                 }
                 return Outcome{ok && worst <= 1e-8, "max excess at R=20/(n-1): " + sci(worst)};
             });
         }},
        {"AC9", Suite::spaceform,
         [] {
             return run_check("AC9", "first zero: Theta vanishes there and is positive before it (20 random profiles)", [] {
                 std::mt19937_64 rng(2024);
                 std::uniform_real_distribution<double> k_dist(-2.0, 2.0), h_dist(-3.0, 3.0), f_dist(0.05, 3.0);
                 std::uniform_int_distribution<int> n_dist(2, 5);
                 bool positive = true;
                 double worst_zero = 0.0;
                 for (int i = 0; i < 20; ++i) {
                     const double K = k_dist(rng);
                     const double H = K > 0 ? h_dist(rng) : std::sqrt(-K) * (1.0 + f_dist(rng)) + 1e-3;
                     const ThetaProfile p(n_dist(rng), K, H);
                     const double zero = spaceform::theta_first_zero(p);
                     worst_zero = std::max(worst_zero, std::abs(spaceform::theta_eval(p, zero)));
                     const double top = zero * (1.0 - 1e-6);
                     for (int s = 0; s < 1000; ++s) positive = positive && spaceform::theta_eval(p, top * s / 999.0) > 0;
                 }
                 return Outcome{positive && worst_zero <= 1e-10, "max |Theta(first zero)| " + sci(worst_zero)};
             });
         }},
        {"AC10", Suite::solver,
         [] {
             return run_check("AC10", "subharmonic ratio of g^2 >= main bound (100 random g per domain)", [] {
                 std::mt19937_64 rng(77);
                 std::uniform_real_distribution<double> coef(-1.0, 1.0);
                 const int N = 10;
                 bool ok = true;
                 double worst_margin = INFINITY;
                 for (const auto& entry : corpus()) {
                     const auto ruled = geometry::build_quadrature(entry.domain, solver::default_quadrature_order(N));
                     for (int i = 0; i < 100; ++i) {
                         std::vector<double> g(2 * N + 1);
                         for (double& c : g) c = coef(rng);
                         const auto r = solver::subharmonic_ratio(ruled, g, N);
                         ok = ok && r.ratio >= r.bound - 1e-9;
                         worst_margin = std::min(worst_margin, r.ratio - r.bound);
                     }
                 }
                 return Outcome{ok, "min ratio - bound " + sci(worst_margin)};
             });
         }},
        {"AC11", Suite::bounds,
         [] {
             return run_check("AC11", "closed forms vs quadrature: K=0 to 1e-12, K=-1 H=1 to 1e-8", [] {
                 MaxError k0, km1;
                 for (int n = 2; n <= 5; ++n) {
                     for (double H : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
                         for (double R : {0.1, 0.2, 0.3, 0.4, 0.5}) {
                             k0.add(std::abs(bounds::explicit_bound_k0(n, H, R) -
                                             bounds::main_lower_bound(ThetaProfile(n, 0.0, H), R)),
                                    1e-12);
                         }
                     }
                     for (double R : {0.1, 0.3, 0.7, 1.0, 2.0, 5.0, 10.0}) {
                         km1.add(std::abs(bounds::explicit_bound_kneg1(n, 1.0, R) -
                                          bounds::main_lower_bound(ThetaProfile(n, -1.0, 1.0), R)),
                                 1e-8);
                     }
                 }
                 return Outcome{k0.ok && km1.ok, "K=0 max err " + sci(k0.worst) + ", K=-1 max err " + sci(km1.worst)};
             });
         }},
    };
    return list;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "spaceform") return Suite::spaceform;
    if (name == "bounds") return Suite::bounds;
    if (name == "solver") return Suite::solver;
    if (name == "harness") return Suite::harness;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

std::vector<CheckResult> run_properties(Suite suite) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (suite == Suite::spaceform || suite == Suite::all) append(spaceform_properties());
    if (suite == Suite::bounds || suite == Suite::all) append(bounds_properties());
    if (suite == Suite::solver || suite == Suite::all) append(solver_properties());
    if (suite == Suite::harness || suite == Suite::all) append(harness_properties());
    return out;
}

std::vector<CheckResult> run_acceptance(Suite suite) {
    std::vector<CheckResult> out;
    for (const auto& c : criteria()) {
        if (suite == Suite::all || c.suite == suite) out.push_back(c.run());
    }
    return out;
}

std::vector<CheckResult> run_suite(Suite suite) {
    auto out = run_properties(suite);
    auto acc = run_acceptance(suite);
    out.insert(out.end(), acc.begin(), acc.end());
    return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::string out;
    char buf[64];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof buf, "%-4s  %-30s ", r.passed ? "PASS" : "FAIL", r.id.c_str());
        out += buf;
        std::snprintf(buf, sizeof buf, "(%.3fs)", r.seconds);
        out += r.title + "  " + buf + "  " + r.detail + "\n";
    }
    return out;
}

}  // namespace steklov::verify
