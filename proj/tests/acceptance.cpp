// SPDX-License-Identifier: Apache-2.0
// Prints one line per acceptance criterion; exit status 0 iff all pass.
#include <cstdio>

#include "steklov/verify.hpp"

int main() {
    const auto results = steklov::verify::run_acceptance(steklov::verify::Suite::all);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%-4s %s: %s [%s] (%.3f s)\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%zu/%zu acceptance criteria passed\n", results.size() - failed, results.size());
    return failed == 0 && results.size() == 11 ? 0 : 1;
}
