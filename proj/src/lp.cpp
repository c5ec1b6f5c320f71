// SPDX-License-Identifier: Apache-2.0
#include "steklov/lp.hpp"

#include <limits>

#include "steklov/errors.hpp"

namespace steklov::lp {

Solution maximize(const Problem& pb) {
    const int m = pb.rows;
    const int n = pb.cols;
    if (m < 1 || n < 1 || static_cast<int>(pb.A.size()) != m * n || static_cast<int>(pb.b.size()) != m ||
        static_cast<int>(pb.c.size()) != n) {
        throw ValidationError("lp: inconsistent problem dimensions");
    }
    for (double bi : pb.b) {
        if (bi < 0) throw ValidationError("lp: right-hand side must be non-negative");
    }

    // Tableau rows 0..m-1 are constraints, row m is the objective (-c).
    const int width = n + m + 1;
    std::vector<double> T(static_cast<std::size_t>((m + 1) * width), 0.0);
    auto at = [&](int r, int col) -> double& { return T[static_cast<std::size_t>(r * width + col)]; };
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = pb.A[static_cast<std::size_t>(i * n + j)];
        at(i, n + i) = 1.0;
        at(i, width - 1) = pb.b[static_cast<std::size_t>(i)];
        basis[static_cast<std::size_t>(i)] = n + i;
    }
    for (int j = 0; j < n; ++j) at(m, j) = -pb.c[static_cast<std::size_t>(j)];

    constexpr double eps = 1e-12;
    const int max_iter = 50 * (m + n) + 100;
    for (int iter = 0; iter < max_iter; ++iter) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (at(m, j) < -eps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            const double a = at(i, enter);
            if (a <= eps) continue;
            const double ratio = at(i, width - 1) / a;
            if (ratio < best - eps ||
                (ratio <= best + eps && leave >= 0 && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw Error("lp: problem is unbounded");

        const double pivot = at(leave, enter);
        for (int j = 0; j < width; ++j) at(leave, j) /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double factor = at(i, enter);
            if (factor == 0.0) continue;
            for (int j = 0; j < width; ++j) at(i, j) -= factor * at(leave, j);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    Solution sol;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
        const int var = basis[static_cast<std::size_t>(i)];
        if (var < n) sol.x[static_cast<std::size_t>(var)] = at(i, width - 1);
    }
    sol.objective = at(m, width - 1);
    return sol;
}

}  // namespace steklov::lp
