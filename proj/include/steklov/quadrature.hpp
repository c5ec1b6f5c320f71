// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace steklov::quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// m-point Gauss-Legendre rule, exact for polynomials of degree 2m-1.
GaussRule gauss_legendre(int points);

/// Same rule affinely mapped to [a, b].
GaussRule gauss_legendre(int points, double a, double b);

/// Adaptive 15-point Gauss-Kronrod integration with interval bisection.
/// Throws steklov::Error if the tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 0.0);

}  // namespace steklov::quadrature
