// One test case per acceptance criterion; each prints a PASS/FAIL line with
// the check's details and fails the test when the criterion does not hold.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "leantree/verify.hpp"

namespace {

bool run_criterion(const char* id) {
    const auto r = leantree::run_check(leantree::find_check(id));
    std::printf("[%s] %s  %s  (%.3f s)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds);
    for (const auto& d : r.details) {
        std::printf("       %s\n", d.c_str());
    }
    std::fflush(stdout);
    return r.passed;
}

}  // namespace

TEST_CASE("AC1 exact counts agree across methods") { CHECK(run_criterion("AC1")); }
TEST_CASE("AC2 closed walks count trees") { CHECK(run_criterion("AC2")); }
TEST_CASE("AC3 bijection round trips") { CHECK(run_criterion("AC3")); }
TEST_CASE("AC4 root brackets") { CHECK(run_criterion("AC4")); }
TEST_CASE("AC5 growth constants") { CHECK(run_criterion("AC5")); }
TEST_CASE("AC6 leaning-tree spectra") { CHECK(run_criterion("AC6")); }
TEST_CASE("AC7 Ulam-Harris minimisation") { CHECK(run_criterion("AC7")); }
TEST_CASE("AC8 embedding bound") { CHECK(run_criterion("AC8")); }
TEST_CASE("AC9 coefficient ratios") { CHECK(run_criterion("AC9")); }
