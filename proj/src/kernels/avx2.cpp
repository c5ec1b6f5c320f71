// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "steklov/errors.hpp"
#include "steklov/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define STEKLOV_TARGET_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace steklov::kernels::avx2 {

#ifdef STEKLOV_TARGET_AVX2

namespace {

constexpr std::size_t kBlock = 256;

STEKLOV_TARGET_AVX2 double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

STEKLOV_TARGET_AVX2 void evaluate_basis(std::span<const double> xs, std::span<const double> ys,
                                        const BasisFrame& frame, std::span<double> out) {
    const std::size_t points = xs.size();
    if (ys.size() != points || out.size() != basis_size(frame.degree) * points) {
        throw ValidationError("evaluate_basis: size mismatch");
    }
    const __m256d cx = _mm256_set1_pd(frame.cx);
    const __m256d cy = _mm256_set1_pd(frame.cy);
    const __m256d s = _mm256_set1_pd(frame.inv_scale);
    const __m256d one = _mm256_set1_pd(1.0);
    double* dst = out.data();

    std::size_t q = 0;
    for (; q + 4 <= points; q += 4) {
        const __m256d u = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(xs.data() + q), cx), s);
        const __m256d v = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(ys.data() + q), cy), s);
        __m256d re = one;
        __m256d im = _mm256_setzero_pd();
        _mm256_storeu_pd(dst + q, one);
        for (int k = 1; k <= frame.degree; ++k) {
            const __m256d nre = _mm256_sub_pd(_mm256_mul_pd(re, u), _mm256_mul_pd(im, v));
            const __m256d nim = _mm256_add_pd(_mm256_mul_pd(re, v), _mm256_mul_pd(im, u));
            re = nre;
            im = nim;
            _mm256_storeu_pd(dst + (2 * static_cast<std::size_t>(k) - 1) * points + q, re);
            _mm256_storeu_pd(dst + (2 * static_cast<std::size_t>(k)) * points + q, im);
        }
    }
    for (; q < points; ++q) {
        const double u = (xs[q] - frame.cx) * frame.inv_scale;
        const double v = (ys[q] - frame.cy) * frame.inv_scale;
        double re = 1.0;
        double im = 0.0;
        dst[q] = 1.0;
        for (int k = 1; k <= frame.degree; ++k) {
            const double nre = re * u - im * v;
            const double nim = re * v + im * u;
            re = nre;
            im = nim;
            dst[(2 * static_cast<std::size_t>(k) - 1) * points + q] = re;
            dst[(2 * static_cast<std::size_t>(k)) * points + q] = im;
        }
    }
}

STEKLOV_TARGET_AVX2 void accumulate_gram(std::span<const double> phi, std::size_t cols,
                                         std::span<const double> weights, std::span<double> gram) {
    const std::size_t points = weights.size();
    if (phi.size() != cols * points || gram.size() != cols * cols) {
        throw ValidationError("accumulate_gram: size mismatch");
    }
    std::fill(gram.begin(), gram.end(), 0.0);
    const double* w = weights.data();
    double wpi[kBlock];

    for (std::size_t p0 = 0; p0 < points; p0 += kBlock) {
        const std::size_t len = std::min(kBlock, points - p0);
        const std::size_t vec_len = len & ~std::size_t{3};
        for (std::size_t i = 0; i < cols; ++i) {
            const double* pi = phi.data() + i * points + p0;
            for (std::size_t q = 0; q < len; ++q) wpi[q] = w[p0 + q] * pi[q];

            std::size_t j = i;
            // Four columns per sweep share each load of w * phi_i.
            for (; j + 4 <= cols; j += 4) {
                const double* pj0 = phi.data() + j * points + p0;
                const double* pj1 = pj0 + points;
                const double* pj2 = pj1 + points;
                const double* pj3 = pj2 + points;
                __m256d a0 = _mm256_setzero_pd();
                __m256d a1 = _mm256_setzero_pd();
                __m256d a2 = _mm256_setzero_pd();
                __m256d a3 = _mm256_setzero_pd();
                std::size_t q = 0;
                for (; q < vec_len; q += 4) {
                    const __m256d t = _mm256_loadu_pd(wpi + q);
                    a0 = _mm256_fmadd_pd(t, _mm256_loadu_pd(pj0 + q), a0);
                    a1 = _mm256_fmadd_pd(t, _mm256_loadu_pd(pj1 + q), a1);
                    a2 = _mm256_fmadd_pd(t, _mm256_loadu_pd(pj2 + q), a2);
                    a3 = _mm256_fmadd_pd(t, _mm256_loadu_pd(pj3 + q), a3);
                }
                double s0 = hsum(a0), s1 = hsum(a1), s2 = hsum(a2), s3 = hsum(a3);
                for (; q < len; ++q) {
                    s0 += wpi[q] * pj0[q];
                    s1 += wpi[q] * pj1[q];
                    s2 += wpi[q] * pj2[q];
                    s3 += wpi[q] * pj3[q];
                }
                double* g = gram.data() + i * cols + j;
                g[0] += s0;
                g[1] += s1;
                g[2] += s2;
                g[3] += s3;
            }
            for (; j < cols; ++j) {
                const double* pj = phi.data() + j * points + p0;
                __m256d a = _mm256_setzero_pd();
                std::size_t q = 0;
                for (; q < vec_len; q += 4) {
                    a = _mm256_fmadd_pd(_mm256_loadu_pd(wpi + q), _mm256_loadu_pd(pj + q), a);
                }
                double sum = hsum(a);
                for (; q < len; ++q) sum += wpi[q] * pj[q];
                gram[i * cols + j] += sum;
            }
        }
    }
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = i + 1; j < cols; ++j) gram[j * cols + i] = gram[i * cols + j];
    }
}

#else

void evaluate_basis(std::span<const double>, std::span<const double>, const BasisFrame&, std::span<double>) {
    throw Error("AVX2 kernels are not built for this target");
}
void accumulate_gram(std::span<const double>, std::size_t, std::span<const double>, std::span<double>) {
    throw Error("AVX2 kernels are not built for this target");
}

#endif

}  // namespace steklov::kernels::avx2
