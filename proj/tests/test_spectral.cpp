#include <cmath>

#include "doctest.h"

#include "leantree/errors.hpp"
#include "leantree/series.hpp"
#include "leantree/spectral.hpp"
#include "leantree/ulam_harris.hpp"

using namespace leantree;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

LabelledPlaneTree star(unsigned leaves) {
    LabelledPlaneTree t{2, {}};
    t.children.assign(leaves, LabelledPlaneTree{1, {}});
    return t;
}

}  // namespace

TEST_CASE("closed walk counts") {
    CHECK(closed_walk_count(parse_tree("7(3 2(1))"), 0) == 1);
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(closed_walk_count(leaning_tree(k), 2) == k);
    }
    CHECK(closed_walk_count(leaning_tree(2), 4) == 5);
    CHECK_THROWS_AS(closed_walk_count(leaning_tree(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(closed_walk_count(leaning_tree(2), 4, 99), std::out_of_range);
    CHECK_THROWS_AS(closed_walk_count(leaning_tree(10), 2000, 0, 1000), GuardError);
}

TEST_CASE("walk count table agrees with the bijection counts") {
    for (unsigned k = 0; k <= 6; ++k) {
        const auto table = walk_count_table(leaning_tree(k), 8);
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(table.counts[n] == count_with_root_label(n + 1, k + 1));
        }
    }
}

TEST_CASE("power iteration on small trees") {
    const auto edge = lambda1_power_iteration(leaning_tree(1));
    CHECK(edge.value == doctest::Approx(1.0).epsilon(1e-12));
    const auto p4 = lambda1_power_iteration(leaning_tree(2));
    CHECK(p4.value == doctest::Approx(kGolden).epsilon(1e-10));
    CHECK(p4.value <= kGolden + 1e-14);
    CHECK(p4.upper_bound >= kGolden - 1e-14);
    for (unsigned leaves = 1; leaves <= 9; ++leaves) {
        CHECK(lambda1_power_iteration(star(leaves)).value ==
              doctest::Approx(std::sqrt(double(leaves))).epsilon(1e-9));
    }
    CHECK(lambda1_power_iteration(parse_tree("1")).value == 0.0);
}

TEST_CASE("power iteration reports non-convergence") {
    PowerIterationOptions opts;
    opts.tol = 1e-15;
    opts.max_iterations = 3;
    CHECK_THROWS_AS(lambda1_power_iteration(leaning_tree(6), opts), NotConverged);
}

TEST_CASE("trace estimates") {
    const auto edge = lambda1_trace_estimate(leaning_tree(1), 7);
    CHECK(edge.min_based == doctest::Approx(1.0));
    CHECK(edge.max_based == doctest::Approx(1.0));
    // P4 spectrum: +-phi with eigenvector (1, phi, phi, 1) and +-1/phi with
    // (phi, 1, -1, -phi), both unnormalised. W_20 at an end and an inner vertex:
    const double norm2 = 2 + 2 * kGolden * kGolden;
    const double end_w = 2 * (std::pow(kGolden, 20) + kGolden * kGolden * std::pow(kGolden, -20)) / norm2;
    const double inner_w = 2 * (kGolden * kGolden * std::pow(kGolden, 20) + std::pow(kGolden, -20)) / norm2;
    const auto p4 = lambda1_trace_estimate(leaning_tree(2), 10);
    CHECK(p4.min_based == doctest::Approx(std::pow(end_w, 1.0 / 20)).epsilon(1e-12));
    CHECK(p4.max_based == doctest::Approx(std::pow(inner_w, 1.0 / 20)).epsilon(1e-12));
    CHECK(std::abs(p4.max_based / kGolden - 1) < 0.05);
    CHECK(std::abs(p4.min_based / kGolden - 1) < 0.07);
    const double lam6 = lambda1_power_iteration(leaning_tree(6)).value;
    CHECK(std::abs(lambda1_trace_estimate(leaning_tree(6), 20).max_based / lam6 - 1) < 0.10);
}

TEST_CASE("walk growth root survives huge counts") {
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 3, 4000);
    CHECK(walk_growth_root(huge, 4000) == doctest::Approx(3.0));
    CHECK(walk_growth_root(BigInt(1), 10) == 1.0);
}

TEST_CASE("degree sandwich") {
    const auto two = stevanovic_bounds(2);
    CHECK(two.lower == doctest::Approx(std::sqrt(2.0)));
    CHECK(two.upper == doctest::Approx(2.0));
    CHECK_FALSE(two.degenerate);
    const auto one = stevanovic_bounds(1);
    CHECK(one.lower == 1.0);
    CHECK(one.upper == 0.0);
    CHECK(one.degenerate);
    CHECK_THROWS_AS(stevanovic_bounds(0), std::invalid_argument);
}

TEST_CASE("leaning eigenvalue bound") {
    CHECK(leaning_eigen_bound(2) == doctest::Approx(1.0));
    CHECK(leaning_eigen_bound(3) == doctest::Approx(kGolden));
    const double l11 = leaning_eigen_bound(11);
    CHECK(l11 * l11 >= 0.5 * 20);
    CHECK(l11 * l11 <= 1.1 * 20);
    CHECK_THROWS_AS(leaning_eigen_bound(30), GuardError);
}

TEST_CASE("trace estimates climb toward lambda_1 from below") {
    // W_2n(v) = sum_i x_i(v)^2 lambda_i^2n is at most lambda_1^2n, and its
    // 2n-th root is nondecreasing in n.
    for (unsigned k = 1; k <= 8; ++k) {
        const auto t = leaning_tree(k);
        const double lam = lambda1_power_iteration(t).upper_bound;
        double prev = lambda1_trace_estimate(t, 1).max_based;
        for (unsigned n = 2; n <= 20; ++n) {
            const auto est = lambda1_trace_estimate(t, n);
            CHECK(est.max_based >= prev - 1e-12);
            CHECK(est.max_based <= lam + 1e-12);
            CHECK(est.min_based <= est.max_based);
            prev = est.max_based;
        }
    }
}

TEST_CASE("decreasing trees sit below the leaning tree of their Ulam-Harris order") {
    // Root label k+1 alone does not embed a tree in T_k: a star 2(1 1) beats T_1.
    CHECK(lambda1_power_iteration(parse_tree("2(1 1)")).value > lambda1_power_iteration(leaning_tree(1)).upper_bound);
    for (unsigned k = 1; k <= 5; ++k) {
        for (unsigned n = 1; n <= 7; ++n) {
            for (const auto& t : enumerate_decreasing_trees(n, k + 1)) {
                if (t.label != k + 1) {
                    continue;
                }
                const auto lam = lambda1_power_iteration(t);
                CHECK(lam.value <= leaning_eigen_bound(uh_min(t).uh) + 1e-8);
                const unsigned delta = max_degree(t);
                if (delta >= 2) {
                    const auto sw = stevanovic_bounds(delta);
                    CHECK(lam.value >= sw.lower - 1e-9);
                    CHECK(lam.value <= sw.upper + 1e-9);
                }
            }
        }
    }
}
