// SPDX-License-Identifier: Apache-2.0
#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

namespace steklov::kernels::scalar {

void evaluate_basis(std::span<const double> xs, std::span<const double> ys, const BasisFrame& frame,
                    std::span<double> out) {
    const std::size_t points = xs.size();
    if (ys.size() != points || out.size() != basis_size(frame.degree) * points) {
        throw ValidationError("evaluate_basis: size mismatch");
    }
    for (std::size_t q = 0; q < points; ++q) {
        const double u = (xs[q] - frame.cx) * frame.inv_scale;
        const double v = (ys[q] - frame.cy) * frame.inv_scale;
        double re = 1.0;
        double im = 0.0;
        out[q] = 1.0;
        for (int k = 1; k <= frame.degree; ++k) {
            const double nre = re * u - im * v;
            const double nim = re * v + im * u;
            re = nre;
            im = nim;
            out[(2 * static_cast<std::size_t>(k) - 1) * points + q] = re;
            out[(2 * static_cast<std::size_t>(k)) * points + q] = im;
        }
    }
}

void accumulate_gram(std::span<const double> phi, std::size_t cols, std::span<const double> weights,
                     std::span<double> gram) {
    const std::size_t points = weights.size();
    if (phi.size() != cols * points || gram.size() != cols * cols) {
        throw ValidationError("accumulate_gram: size mismatch");
    }
    for (std::size_t i = 0; i < cols; ++i) {
        const double* pi = phi.data() + i * points;
        for (std::size_t j = i; j < cols; ++j) {
            const double* pj = phi.data() + j * points;
            double sum = 0.0;
            for (std::size_t q = 0; q < points; ++q) sum += weights[q] * pi[q] * pj[q];
            gram[i * cols + j] = sum;
            gram[j * cols + i] = sum;
        }
    }
}

}  // namespace steklov::kernels::scalar
