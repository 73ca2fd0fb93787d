#pragma once

// Self-checks behind `leantree verify`: the AC1..AC9 acceptance suite plus a few
// structural identities, grouped by scope.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leantree {

enum class VerifyScope { all, series, bijection, roots, spectral, uh };

std::optional<VerifyScope> parse_scope(std::string_view name);
std::string_view scope_name(VerifyScope scope);

struct CheckResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> details;  // values, tolerances, first failures
    double seconds = 0.0;
    double time_limit = 0.0;  // 0: no runtime criterion

    void require(bool ok, const std::string& what);
    void note(std::string line) { details.push_back(std::move(line)); }
};

struct Check {
    std::string id;
    std::string title;
    VerifyScope scope;
    double time_limit;
    std::function<void(CheckResult&)> body;
};

// Runs one check, timing it and turning exceptions into failures.
CheckResult run_check(const Check& check);

// All checks in execution order.
const std::vector<Check>& verification_checks();
const Check& find_check(std::string_view id);

std::vector<CheckResult> run_verification(VerifyScope scope);

}  // namespace leantree
