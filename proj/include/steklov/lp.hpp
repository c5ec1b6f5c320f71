// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace steklov::lp {

/// Dense problem: maximize c^T x subject to A x <= b, x >= 0, with b >= 0
/// so that the slack basis is feasible. A is row-major, rows x cols.
struct Problem {
    int rows = 0;
    int cols = 0;
    std::vector<double> A;
    std::vector<double> b;
    std::vector<double> c;
};

struct Solution {
    std::vector<double> x;
    double objective = 0;
};

/// Primal simplex with Bland's rule. Throws ValidationError on b < 0 or
/// shape mismatch, Error if the problem is unbounded.
Solution maximize(const Problem& problem);

}  // namespace steklov::lp
