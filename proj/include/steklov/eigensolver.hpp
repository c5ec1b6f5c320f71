// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "steklov/geometry2d.hpp"

// q1 of a planar domain as the minimum of int_bd h^2 / int_Omega h^2 over
// harmonic h, discretized by harmonic polynomials about an interior center
// (method of particular solutions).

namespace steklov::solver {

struct HarmonicModel {
    geometry::PlanarDomain domain;
    int degree = 0;
    geometry::Point center;
    double scale = 1.0;  // basis uses w = (z - center) / scale

    Eigen::MatrixXd boundary_gram;
    Eigen::MatrixXd interior_gram;

    std::optional<double> q1;
    Eigen::VectorXd coefficients;  // minimizer, normalized to x^T M_Omega x = 1
    double condition_cutoff = 0.0;
    int retained_rank = 0;
};

/// Gram matrices of the basis {1, Re w^k, Im w^k : k = 1..degree} under the
/// domain's quadrature rules. Throws ValidationError if the rules are not
/// built, degree < 0, scale <= 0, or the center is not strictly interior.
HarmonicModel assemble(const geometry::PlanarDomain& domain, int degree, geometry::Point center,
                       double scale = 1.0);

/// Whitens M_Omega (relative cutoff), then takes the smallest eigenvalue of
/// the projected M_bd. Throws NumericalRankError if nothing survives the cutoff.
HarmonicModel solve_q1(HarmonicModel model, double cutoff = 1e-12);

/// Quadrature order used by solve_domain for a given degree.
int default_quadrature_order(int degree);

/// Builds quadrature, centers the basis at the centroid scaled by the
/// largest center-to-boundary distance, assembles and solves.
HarmonicModel solve_domain(const geometry::PlanarDomain& domain, int degree, double cutoff = 1e-12);

/// Value at p of the harmonic polynomial with the given coefficients.
double evaluate_harmonic(std::span<const double> coefficients, geometry::Point center, double scale,
                         geometry::Point p);

struct Pencil2 {
    double a11, a12, a22;
};

/// Both eigenvalues (ascending) of A x = lambda B x for symmetric A and
/// symmetric positive definite B.
std::pair<double, double> pencil_eigenvalues(const Pencil2& A, const Pencil2& B);

struct CylinderSpectrum {
    double circumference;
    double half_height;
    int mode_count;
    double q1;
    std::vector<double> per_mode_minima;  // index m = circle mode
};

/// Exact q1 of the flat cylinder (circle of length L) x [0, 2R] by separation
/// of variables: each circle mode reduces to a 2x2 pencil.
CylinderSpectrum cylinder_q1(double L, double R, int mode_max);

/// Mode-0 pencil on [0, 2R] in the basis {1, y}: (M_bd, M_Omega) per unit length.
std::pair<Pencil2, Pencil2> cylinder_mode0_pencil(double R);

struct SubharmonicRatio {
    double ratio;  // int_bd g^2 / int_Omega g^2
    double bound;  // main lower bound from the domain's (H, R)
};

/// g is given in the unscaled basis about `center` (default: centroid).
/// Throws ValidationError for an all-zero coefficient vector or a size that
/// does not match the degree.
SubharmonicRatio subharmonic_ratio(const geometry::PlanarDomain& domain, std::span<const double> g, int degree,
                                   std::optional<geometry::Point> center = {});

}  // namespace steklov::solver
