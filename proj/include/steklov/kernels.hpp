// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops of the harmonic eigensolver. Each kernel has a
// scalar reference and an AVX2 variant; the public entry points dispatch on
// the instruction set detected at runtime.
//
// Layouts are basis-major: phi[col * points + q] is basis function `col`
// at quadrature point q.

namespace steklov::kernels {

enum class Isa { scalar, avx2 };

/// Best instruction set supported by this CPU and build.
Isa detected_isa();
const char* isa_name(Isa isa);
bool isa_available(Isa isa);

/// Harmonic polynomial frame: w = (z - center) * inv_scale, basis
/// {1, Re w, Im w, Re w^2, Im w^2, ..., Re w^N, Im w^N}.
struct BasisFrame {
    double cx = 0;
    double cy = 0;
    double inv_scale = 1;
    int degree = 0;
};

constexpr std::size_t basis_size(int degree) { return 2 * static_cast<std::size_t>(degree) + 1; }

/// out.size() == basis_size(degree) * xs.size().
void evaluate_basis(std::span<const double> xs, std::span<const double> ys, const BasisFrame& frame,
                    std::span<double> out);

/// gram[i * cols + j] = sum_q weights[q] phi[i][q] phi[j][q]; overwrites gram
/// (cols * cols entries) with an exactly symmetric result.
void accumulate_gram(std::span<const double> phi, std::size_t cols, std::span<const double> weights,
                     std::span<double> gram);

namespace scalar {
void evaluate_basis(std::span<const double> xs, std::span<const double> ys, const BasisFrame& frame,
                    std::span<double> out);
void accumulate_gram(std::span<const double> phi, std::size_t cols, std::span<const double> weights,
                     std::span<double> gram);
}  // namespace scalar

namespace avx2 {
// Callable only when isa_available(Isa::avx2).
void evaluate_basis(std::span<const double> xs, std::span<const double> ys, const BasisFrame& frame,
                    std::span<double> out);
void accumulate_gram(std::span<const double> phi, std::size_t cols, std::span<const double> weights,
                     std::span<double> gram);
}  // namespace avx2

}  // namespace steklov::kernels
