// SPDX-License-Identifier: Apache-2.0
#include "steklov/kernels.hpp"

namespace steklov::kernels {

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    static const Isa isa = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void evaluate_basis(std::span<const double> xs, std::span<const double> ys, const BasisFrame& frame,
                    std::span<double> out) {
    if (detected_isa() == Isa::avx2) {
        avx2::evaluate_basis(xs, ys, frame, out);
    } else {
        scalar::evaluate_basis(xs, ys, frame, out);
    }
}

void accumulate_gram(std::span<const double> phi, std::size_t cols, std::span<const double> weights,
                     std::span<double> gram) {
    if (detected_isa() == Isa::avx2) {
        avx2::accumulate_gram(phi, cols, weights, gram);
    } else {
        scalar::accumulate_gram(phi, cols, weights, gram);
    }
}

}  // namespace steklov::kernels
