#include "leantree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "leantree/errors.hpp"

namespace leantree {

namespace {

void check_budget(std::size_t vertices, unsigned half, std::uint64_t budget) {
    if (static_cast<std::uint64_t>(vertices) * half > budget) {
        throw GuardError("walk counting cost " + std::to_string(vertices) + " x " +
                         std::to_string(half) + " exceeds budget " + std::to_string(budget));
    }
}

// out = A x for the tree adjacency.
void multiply(const TreeAdjacency& adj, const std::vector<BigInt>& x, std::vector<BigInt>& out) {
    const std::size_t n = adj.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        out[v] = 0;
        for (std::uint32_t e = adj.offsets[v]; e < adj.offsets[v + 1]; ++e) {
            out[v] += x[adj.neighbors[e]];
        }
    }
}

BigInt squared_norm(const std::vector<BigInt>& x) {
    BigInt acc;
    for (const auto& c : x) {
        mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
    }
    return acc;
}

// A is symmetric, so (A^{2n})_{vv} = |A^n e_v|^2.
BigInt closed_walks_from(const TreeAdjacency& adj, std::size_t vertex, unsigned half) {
    std::vector<BigInt> x(adj.vertex_count());
    std::vector<BigInt> y(adj.vertex_count());
    x[vertex] = 1;
    for (unsigned step = 0; step < half; ++step) {
        multiply(adj, x, y);
        x.swap(y);
    }
    return squared_norm(x);
}

}  // namespace

BigInt closed_walk_count(const LabelledPlaneTree& t, unsigned two_n, std::size_t vertex,
                         std::uint64_t budget) {
    if (two_n % 2 != 0) {
        throw std::invalid_argument("closed walk length must be even");
    }
    const auto adj = adjacency_of(t);
    if (vertex >= adj.vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(vertex) + " not in tree");
    }
    check_budget(adj.vertex_count(), two_n / 2, budget);
    return closed_walks_from(adj, vertex, two_n / 2);
}

WalkCountTable walk_count_table(const LabelledPlaneTree& t, unsigned max_half, std::uint64_t budget) {
    const auto adj = adjacency_of(t);
    check_budget(adj.vertex_count(), max_half, budget);
    WalkCountTable table;
    std::vector<BigInt> x(adj.vertex_count());
    std::vector<BigInt> y(adj.vertex_count());
    x[0] = 1;
    table.counts.push_back(1);
    for (unsigned n = 1; n <= max_half; ++n) {
        multiply(adj, x, y);
        x.swap(y);
        table.counts.push_back(squared_norm(x));
    }
    return table;
}

SpectralRadius lambda1_power_iteration(const TreeAdjacency& adj, PowerIterationOptions opts) {
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("power iteration tolerance must be positive");
    }
    const std::size_t n = adj.vertex_count();
    // Tree spectra are symmetric about 0, so plain iteration on A oscillates
    // between the +lambda_1 and -lambda_1 eigenvectors. A + I separates them.
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    SpectralRadius result;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        double xy = 0.0;
        double xx = 0.0;
        double ratio_max = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            double s = x[v];
            for (std::uint32_t e = adj.offsets[v]; e < adj.offsets[v + 1]; ++e) {
                s += x[adj.neighbors[e]];
            }
            y[v] = s;
            xy += x[v] * s;
            xx += x[v] * x[v];
            ratio_max = std::max(ratio_max, s / x[v]);
        }
        result.value = xy / xx - 1.0;
        result.upper_bound = ratio_max - 1.0;
        result.iterations = it;
        if (result.upper_bound - result.value <= opts.tol * std::max(1.0, result.value)) {
            return result;
        }
        const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (std::size_t v = 0; v < n; ++v) {
            x[v] = y[v] / norm;
        }
    }
    throw NotConverged("power iteration did not converge in " +
                           std::to_string(opts.max_iterations) + " iterations",
                       result.value);
}

SpectralRadius lambda1_power_iteration(const LabelledPlaneTree& t, PowerIterationOptions opts) {
    return lambda1_power_iteration(adjacency_of(t), opts);
}

double walk_growth_root(const BigInt& count, unsigned two_n) {
    if (sgn(count) <= 0) {
        return 0.0;
    }
    if (two_n == 0) {
        return 1.0;
    }
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, count.get_mpz_t());
    const double log_count = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
    return std::exp(log_count / two_n);
}

TraceEstimate lambda1_trace_estimate(const LabelledPlaneTree& t, unsigned half_length,
                                     std::uint64_t budget) {
    if (half_length == 0) {
        throw std::invalid_argument("trace estimate needs n >= 1");
    }
    const auto adj = adjacency_of(t);
    const std::size_t n = adj.vertex_count();
    if (static_cast<std::uint64_t>(n) * n * half_length > budget) {
        throw GuardError("trace estimate cost " + std::to_string(n) + "^2 x " +
                         std::to_string(half_length) + " exceeds budget " + std::to_string(budget));
    }
    BigInt lo;
    BigInt hi;
    for (std::size_t v = 0; v < n; ++v) {
        BigInt w = closed_walks_from(adj, v, half_length);
        if (v == 0 || w < lo) {
            lo = w;
        }
        if (v == 0 || w > hi) {
            hi = w;
        }
    }
    return {walk_growth_root(lo, 2 * half_length), walk_growth_root(hi, 2 * half_length)};
}

DegreeSandwich stevanovic_bounds(unsigned delta) {
    if (delta == 0) {
        throw std::invalid_argument("maximum degree must be at least 1");
    }
    return {std::sqrt(static_cast<double>(delta)), 2.0 * std::sqrt(static_cast<double>(delta - 1)),
            delta == 1};
}

double leaning_eigen_bound(unsigned uh, PowerIterationOptions opts, unsigned max_order) {
    if (uh == 0) {
        throw std::invalid_argument("Ulam-Harris number must be at least 1");
    }
    return lambda1_power_iteration(leaning_tree(uh - 1, max_order), opts).value;
}

}  // namespace leantree
