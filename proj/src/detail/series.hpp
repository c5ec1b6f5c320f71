// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace steklov::detail {

// x - sin(x) and sinh(x) - x without cancellation near 0.
inline double x_minus_sin(double x) {
    if (std::abs(x) > 0.5) return x - std::sin(x);
    double term = x * x * x / 6.0;
    double sum = 0.0;
    for (int k = 1; k < 20 && std::abs(term) > 1e-18 * std::abs(sum); ++k) {
        sum += term;
        term *= -x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
}

inline double sinh_minus_x(double x) {
    if (std::abs(x) > 0.5) return std::sinh(x) - x;
    double term = x * x * x / 6.0;
    double sum = 0.0;
    for (int k = 1; k < 20 && std::abs(term) > 1e-18 * std::abs(sum); ++k) {
        sum += term;
        term *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
}

}  // namespace steklov::detail
