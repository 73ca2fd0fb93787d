#pragma once

// Closed-walk counts and top adjacency eigenvalue of trees.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leantree/series.hpp"
#include "leantree/tree.hpp"

namespace leantree {

// Cap on vertex_count * half_length for exact walk counting.
inline constexpr std::uint64_t kWalkCountBudget = 2'000'000'000;

// W_{2n}(v): closed walks of length two_n from vertex v (preorder id; 0 is the
// root). Throws std::invalid_argument for odd lengths, GuardError over budget.
BigInt closed_walk_count(const LabelledPlaneTree& t, unsigned two_n, std::size_t vertex = 0,
                         std::uint64_t budget = kWalkCountBudget);

// W_0, W_2, ..., W_{2 max_half} at the root.
struct WalkCountTable {
    std::vector<BigInt> counts;  // counts[n] = W_{2n}(root)
};

WalkCountTable walk_count_table(const LabelledPlaneTree& t, unsigned max_half,
                                std::uint64_t budget = kWalkCountBudget);

struct PowerIterationOptions {
    double tol = 1e-10;
    std::size_t max_iterations = 1'000'000;
};

struct SpectralRadius {
    double value = 0.0;        // Rayleigh quotient, never above lambda_1
    double upper_bound = 0.0;  // Collatz-Wielandt bound, never below lambda_1
    std::size_t iterations = 0;
};

// Largest adjacency eigenvalue by power iteration on A + I from the all-ones
// vector. Stops once the Collatz-Wielandt upper bound and the Rayleigh quotient
// agree to tol relative. Throws NotConverged at the iteration cap.
SpectralRadius lambda1_power_iteration(const LabelledPlaneTree& t, PowerIterationOptions opts = {});
SpectralRadius lambda1_power_iteration(const TreeAdjacency& adj, PowerIterationOptions opts = {});

// (min_v W_{2n}(v))^{1/2n} and (max_v W_{2n}(v))^{1/2n}. Both tend to lambda_1
// as n grows; neither is a certified bound at finite n.
struct TraceEstimate {
    double min_based = 0.0;
    double max_based = 0.0;
};

TraceEstimate lambda1_trace_estimate(const LabelledPlaneTree& t, unsigned half_length,
                                     std::uint64_t budget = kWalkCountBudget);

// W^{1/2n} in double precision without overflow.
double walk_growth_root(const BigInt& count, unsigned two_n);

struct DegreeSandwich {
    double lower = 0.0;  // sqrt(delta)
    double upper = 0.0;  // 2 sqrt(delta - 1)
    bool degenerate = false;  // delta == 1: upper formula is vacuous
};

// Throws std::invalid_argument for delta == 0.
DegreeSandwich stevanovic_bounds(unsigned delta);

// lambda_1 of the leaning tree of order uh - 1, an upper bound for the top
// eigenvalue of any tree with Ulam-Harris number uh.
double leaning_eigen_bound(unsigned uh, PowerIterationOptions opts = {},
                           unsigned max_order = kLeaningTreeMaxOrder);

}  // namespace leantree
