// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Property checks and acceptance criteria, runnable from the CLI and the
// acceptance test binary.

namespace steklov::verify {

enum class Suite { spaceform, bounds, solver, harness, all };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckResult {
    std::string id;     // e.g. "AC3" or "spaceform.ball-identity"
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Module properties for the suite (all suites for Suite::all).
std::vector<CheckResult> run_properties(Suite suite);

/// Acceptance criteria AC1..AC11 that belong to the suite.
std::vector<CheckResult> run_acceptance(Suite suite);

/// Properties followed by acceptance criteria.
std::vector<CheckResult> run_suite(Suite suite);

/// One line per check: `PASS  id  title  (time)  detail`.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace steklov::verify
