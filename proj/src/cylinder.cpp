// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/series.hpp"
#include "steklov/eigensolver.hpp"
#include "steklov/errors.hpp"

namespace steklov::solver {

std::pair<double, double> pencil_eigenvalues(const Pencil2& A, const Pencil2& B) {
    const double det_b = B.a11 * B.a22 - B.a12 * B.a12;
    if (!(B.a11 > 0) || !(det_b > 0)) throw ValidationError("pencil: B must be positive definite");
    // C = L^{-1} A L^{-T} with B = L L^T; the symmetric 2x2 C has the pencil's eigenvalues.
    const double l11 = std::sqrt(B.a11);
    const double l21 = B.a12 / l11;
    const double l22 = std::sqrt(det_b / B.a11);
    const double c11 = A.a11 / B.a11;
    const double c12 = (A.a12 - l21 * A.a11 / l11) / (l11 * l22);
    const double c22 = (A.a22 - 2.0 * l21 * A.a12 / l11 + l21 * l21 * A.a11 / B.a11) / (l22 * l22);
    const double mean = 0.5 * (c11 + c22);
    const double half_gap = std::hypot(0.5 * (c11 - c22), c12);
    const double det = (A.a11 * A.a22 - A.a12 * A.a12) / det_b;
    double l1 = mean - half_gap;
    double l2 = mean + half_gap;
    // The eigenvalue of smaller magnitude from the product, avoiding cancellation.
    if (mean >= 0 && l2 != 0.0) l1 = det / l2;
    else if (mean < 0 && l1 != 0.0) l2 = det / l1;
    return {std::min(l1, l2), std::max(l1, l2)};
}

std::pair<Pencil2, Pencil2> cylinder_mode0_pencil(double R) {
    const double h = 2.0 * R;
    // Boundary values of {1, y} at y = 0 and y = 2R; interior integrals over [0, 2R].
    const Pencil2 boundary{2.0, h, h * h};
    const Pencil2 interior{h, h * h / 2.0, h * h * h / 3.0};
    return {boundary, interior};
}

CylinderSpectrum cylinder_q1(double L, double R, int mode_max) {
    if (!(L > 0) || !(R > 0)) throw ValidationError("cylinder: L and R must be positive");
    if (mode_max < 0) throw ValidationError("cylinder: mode_max must be >= 0");

    CylinderSpectrum out{L, R, mode_max, 0.0, {}};
    out.per_mode_minima.reserve(static_cast<std::size_t>(mode_max) + 1);
    const auto [b0, i0] = cylinder_mode0_pencil(R);
    out.per_mode_minima.push_back(pencil_eigenvalues(b0, i0).first);

    for (int m = 1; m <= mode_max; ++m) {
        const double k = 2.0 * std::numbers::pi * m / L;
        const double x = k * R;
        // Basis {cosh(k(y-R)), sinh(k(y-R))} / cosh(kR): same span as
        // {cosh(ky), sinh(ky)}, decoupled by parity about the midplane.
        const double t = std::tanh(x);
        const double sech2 = 1.0 / (std::cosh(x) * std::cosh(x));
        const double even = t / k + R * sech2;
        const double odd = x > 0.25 ? t / k - R * sech2 : detail::sinh_minus_x(2.0 * x) * sech2 / (2.0 * k);
        const Pencil2 boundary{2.0, 0.0, 2.0 * t * t};
        const Pencil2 interior{even, 0.0, odd};
        out.per_mode_minima.push_back(pencil_eigenvalues(boundary, interior).first);
    }
    out.q1 = *std::min_element(out.per_mode_minima.begin(), out.per_mode_minima.end());
    return out;
}

}  // namespace steklov::solver
