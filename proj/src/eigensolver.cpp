// SPDX-License-Identifier: Apache-2.0
#include "steklov/eigensolver.hpp"

#include <algorithm>
#include <cmath>

#include "steklov/bounds.hpp"
#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

namespace steklov::solver {

using geometry::Point;
using geometry::PlanarDomain;

namespace {

template <class Node>
Eigen::MatrixXd gram_from_rule(std::span<const Node> nodes, const kernels::BasisFrame& frame) {
    const std::size_t points = nodes.size();
    const std::size_t cols = kernels::basis_size(frame.degree);
    std::vector<double> xs(points), ys(points), ws(points);
    for (std::size_t q = 0; q < points; ++q) {
        xs[q] = nodes[q].point.x;
        ys[q] = nodes[q].point.y;
        ws[q] = nodes[q].weight;
    }
    std::vector<double> phi(cols * points);
    kernels::evaluate_basis(xs, ys, frame, phi);
    Eigen::MatrixXd gram(cols, cols);
    kernels::accumulate_gram(phi, cols, ws, std::span<double>(gram.data(), cols * cols));
    return gram;
}

}  // namespace

HarmonicModel assemble(const PlanarDomain& domain, int degree, Point center, double scale) {
    if (!domain.has_quadrature()) throw ValidationError("assemble: quadrature rules are not built");
    if (degree < 0) throw ValidationError("assemble: degree must be >= 0");
    if (!(scale > 0) || !std::isfinite(scale)) throw ValidationError("assemble: scale must be positive");
    if (!domain.contains(center)) throw ValidationError("assemble: basis center must lie strictly inside");

    const kernels::BasisFrame frame{center.x, center.y, 1.0 / scale, degree};
    HarmonicModel model{domain, degree, center, scale, {}, {}, std::nullopt, {}, 0.0, 0};
    model.boundary_gram = gram_from_rule(domain.boundary_quadrature(), frame);
    model.interior_gram = gram_from_rule(domain.interior_quadrature(), frame);
    return model;
}

HarmonicModel solve_q1(HarmonicModel model, double cutoff) {
    const Eigen::Index size = model.interior_gram.rows();
    if (size == 0 || model.boundary_gram.rows() != size) throw ValidationError("solve_q1: grams not assembled");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> interior(model.interior_gram);
    if (interior.info() != Eigen::Success) throw NumericalRankError("solve_q1: interior Gram eigensolve failed");
    const Eigen::VectorXd& lambda = interior.eigenvalues();  // ascending
    const double lambda_max = lambda(size - 1);
    if (!(lambda_max > 0)) throw NumericalRankError("solve_q1: interior Gram has no positive mode");

    Eigen::Index first = 0;
    while (first < size && lambda(first) < cutoff * lambda_max) ++first;
    const Eigen::Index rank = size - first;
    if (rank == 0) throw NumericalRankError("solve_q1: every mode fell below the cutoff");

    // Columns Q_r Lambda_r^{-1/2} span the retained subspace orthonormally in M_Omega.
    const Eigen::MatrixXd whiten = interior.eigenvectors().rightCols(rank) *
                                   lambda.tail(rank).cwiseSqrt().cwiseInverse().asDiagonal();
    Eigen::MatrixXd projected = whiten.transpose() * model.boundary_gram * whiten;
    projected = 0.5 * (projected + projected.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reduced(projected);
    if (reduced.info() != Eigen::Success) throw NumericalRankError("solve_q1: reduced eigensolve failed");

    Eigen::VectorXd x = whiten * reduced.eigenvectors().col(0);
    Eigen::Index pivot = 0;
    x.cwiseAbs().maxCoeff(&pivot);
    if (x(pivot) < 0) x = -x;

    model.q1 = reduced.eigenvalues()(0);
    model.coefficients = std::move(x);
    model.condition_cutoff = cutoff;
    model.retained_rank = static_cast<int>(rank);
    return model;
}

int default_quadrature_order(int degree) { return std::max(8, degree + 2); }

HarmonicModel solve_domain(const PlanarDomain& domain, int degree, double cutoff) {
    const PlanarDomain ruled = geometry::build_quadrature(domain, default_quadrature_order(degree));
    const Point center = ruled.centroid();
    return solve_q1(assemble(ruled, degree, center, ruled.max_distance_from(center)), cutoff);
}

double evaluate_harmonic(std::span<const double> coefficients, Point center, double scale, Point p) {
    if (coefficients.empty() || coefficients.size() % 2 == 0) {
        throw ValidationError("evaluate_harmonic: coefficient count must be 2N+1");
    }
    const int degree = static_cast<int>(coefficients.size() / 2);
    const double u = (p.x - center.x) / scale;
    const double v = (p.y - center.y) / scale;
    double re = 1.0, im = 0.0;
    double sum = coefficients[0];
    for (int k = 1; k <= degree; ++k) {
        const double nre = re * u - im * v;
        im = re * v + im * u;
        re = nre;
        sum += coefficients[2 * static_cast<std::size_t>(k) - 1] * re + coefficients[2 * static_cast<std::size_t>(k)] * im;
    }
    return sum;
}

SubharmonicRatio subharmonic_ratio(const PlanarDomain& domain, std::span<const double> g, int degree,
                                   std::optional<Point> center) {
    if (degree < 0 || g.size() != kernels::basis_size(degree)) {
        throw ValidationError("subharmonic_ratio: coefficient count must be 2*degree+1");
    }
    if (std::all_of(g.begin(), g.end(), [](double c) { return c == 0.0; })) {
        throw ValidationError("subharmonic_ratio: g must be non-trivial");
    }
    const int order = default_quadrature_order(degree);
    const PlanarDomain ruled = (domain.has_quadrature() && domain.quadrature_order() >= order)
                                   ? domain
                                   : geometry::build_quadrature(domain, order);
    const Point c = center.value_or(ruled.centroid());

    double boundary = 0.0;
    for (const auto& node : ruled.boundary_quadrature()) {
        const double v = evaluate_harmonic(g, c, 1.0, node.point);
        boundary += node.weight * v * v;
    }
    double interior = 0.0;
    for (const auto& node : ruled.interior_quadrature()) {
        const double v = evaluate_harmonic(g, c, 1.0, node.point);
        interior += node.weight * v * v;
    }

    const geometry::DomainMetrics metrics = geometry::domain_metrics(ruled);
    const double bound =
        bounds::main_lower_bound(spaceform::ThetaProfile(2, 0.0, metrics.min_curvature), metrics.inner_radius);
    return {boundary / interior, bound};
}

}  // namespace steklov::solver
