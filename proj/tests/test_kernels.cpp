// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "steklov/kernels.hpp"

using namespace steklov::kernels;

namespace {

struct Cloud {
    std::vector<double> xs, ys, ws;
};

Cloud random_cloud(std::size_t points, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.5, 1.5), w(0.0, 1.0);
    Cloud c;
    for (std::size_t i = 0; i < points; ++i) {
        c.xs.push_back(u(rng));
        c.ys.push_back(u(rng));
        c.ws.push_back(w(rng));
    }
    return c;
}

}  // namespace

TEST_CASE("scalar basis matches complex powers") {
    const Cloud c = random_cloud(37, 1);
    const BasisFrame frame{0.2, -0.1, 0.7, 6};
    std::vector<double> phi(basis_size(6) * c.xs.size());
    scalar::evaluate_basis(c.xs, c.ys, frame, phi);
    for (std::size_t q = 0; q < c.xs.size(); ++q) {
        const std::complex<double> w((c.xs[q] - 0.2) * 0.7, (c.ys[q] + 0.1) * 0.7);
        CHECK(phi[q] == 1.0);
        for (int k = 1; k <= 6; ++k) {
            const auto wk = std::pow(w, k);
            CHECK(std::abs(phi[(2 * k - 1) * c.xs.size() + q] - wk.real()) < 1e-13);
            CHECK(std::abs(phi[(2 * k) * c.xs.size() + q] - wk.imag()) < 1e-13);
        }
    }
}

TEST_CASE("scalar gram matches a direct triple loop") {
    const Cloud c = random_cloud(53, 2);
    const std::size_t cols = basis_size(4);
    std::vector<double> phi(cols * c.xs.size());
    scalar::evaluate_basis(c.xs, c.ys, {0, 0, 1, 4}, phi);
    std::vector<double> gram(cols * cols);
    scalar::accumulate_gram(phi, cols, c.ws, gram);
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            long double ref = 0;
            for (std::size_t q = 0; q < c.xs.size(); ++q) {
                ref += static_cast<long double>(c.ws[q]) * phi[i * c.xs.size() + q] * phi[j * c.xs.size() + q];
            }
            CHECK(std::abs(gram[i * cols + j] - static_cast<double>(ref)) < 1e-12 * std::max(1.0L, std::abs(ref)));
            CHECK(gram[i * cols + j] == gram[j * cols + i]);
        }
    }
}

TEST_CASE("dispatch reports a usable instruction set") {
    CHECK(isa_available(Isa::scalar));
    CHECK(isa_available(detected_isa()));
    CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
    CHECK(std::string(isa_name(Isa::avx2)) == "avx2");
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!isa_available(Isa::avx2)) {
        MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
        return;
    }
    // Point counts straddle the vector width and the 256-point block.
    for (std::size_t points : {1u, 3u, 4u, 5u, 17u, 255u, 256u, 257u, 1000u}) {
        for (int degree : {0, 1, 2, 7, 20}) {
            const Cloud c = random_cloud(points, static_cast<unsigned>(points * 31 + degree));
            const BasisFrame frame{0.1, 0.3, 0.8, degree};
            const std::size_t cols = basis_size(degree);
            std::vector<double> a(cols * points), b(cols * points);
            scalar::evaluate_basis(c.xs, c.ys, frame, a);
            avx2::evaluate_basis(c.xs, c.ys, frame, b);
            // Error measured against |w|^k: Re and Im of w^k may cancel while
            // the modulus does not.
            double basis_err = 0;
            for (std::size_t q = 0; q < points; ++q) {
                const double r = std::hypot(c.xs[q] - 0.1, c.ys[q] - 0.3) * 0.8;
                for (std::size_t col = 0; col < cols; ++col) {
                    const double mag = std::max(1.0, std::pow(r, static_cast<double>((col + 1) / 2)));
                    basis_err = std::max(basis_err, std::abs(a[col * points + q] - b[col * points + q]) / mag);
                }
            }
            CHECK(basis_err < 1e-14);

            std::vector<double> ga(cols * cols), gb(cols * cols, 123.0);
            scalar::accumulate_gram(a, cols, c.ws, ga);
            avx2::accumulate_gram(a, cols, c.ws, gb);
            double gram_err = 0, scale = 0;
            for (std::size_t i = 0; i < ga.size(); ++i) {
                gram_err = std::max(gram_err, std::abs(ga[i] - gb[i]));
                scale = std::max(scale, std::abs(ga[i]));
            }
            CHECK(gram_err <= 1e-13 * std::max(1.0, scale));
            for (std::size_t i = 0; i < cols; ++i) {
                for (std::size_t j = 0; j < cols; ++j) CHECK(gb[i * cols + j] == gb[j * cols + i]);
            }
        }
    }
}

TEST_CASE("dispatching entry points match the reference") {
    const Cloud c = random_cloud(300, 9);
    const BasisFrame frame{0, 0, 1, 5};
    const std::size_t cols = basis_size(5);
    std::vector<double> a(cols * 300), b(cols * 300);
    scalar::evaluate_basis(c.xs, c.ys, frame, a);
    evaluate_basis(c.xs, c.ys, frame, b);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-14 * std::max(1.0, std::abs(a[i])));
    std::vector<double> ga(cols * cols), gb(cols * cols);
    scalar::accumulate_gram(a, cols, c.ws, ga);
    accumulate_gram(a, cols, c.ws, gb);
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(std::abs(ga[i] - gb[i]) <= 1e-12 * std::max(1.0, std::abs(ga[i])));
}
