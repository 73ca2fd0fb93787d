#include <algorithm>
#include <random>

#include "doctest.h"

#include "leantree/errors.hpp"
#include "leantree/ulam_harris.hpp"

using namespace leantree;

TEST_CASE("ordered Ulam-Harris numbers") {
    CHECK(uh_ordered(parse_tree("1")).uh == 1);
    for (unsigned s = 1; s <= 6; ++s) {
        LabelledPlaneTree t{1, std::vector<LabelledPlaneTree>(s)};
        CHECK(uh_ordered(t).uh == s + 1);
    }
    for (unsigned k = 0; k <= 10; ++k) {
        CHECK(uh_ordered(leaning_tree(k)).uh == k + 1);
    }
    const auto r = uh_ordered(parse_tree("3(2(1) 1)"));
    CHECK(r.per_node == std::vector<std::uint32_t>{1, 2, 3, 3});
    CHECK(format_tree(with_uh_labels(r)) == "1(2(3) 3)");
}

TEST_CASE("minimised Ulam-Harris numbers") {
    CHECK(uh_min(parse_tree("1")).uh == 1);
    CHECK(uh_min(parse_tree("1(1 1)")).uh == 3);
    for (unsigned m = 1; m <= 10; ++m) {
        LabelledPlaneTree path{1, {}};
        for (unsigned i = 1; i < m; ++i) {
            path = LabelledPlaneTree{1, {path}};
        }
        CHECK(uh_min(path).uh == m);
    }
    for (unsigned k = 0; k <= 10; ++k) {
        auto t = leaning_tree(k);
        std::reverse(t.children.begin(), t.children.end());
        CHECK(uh_min(t).uh == k + 1);
    }
    // Reversing the leaning tree's children is strictly worse.
    auto rev = leaning_tree(4);
    std::reverse(rev.children.begin(), rev.children.end());
    CHECK(uh_ordered(rev).uh > 5);
}

TEST_CASE("witness reproduces the minimum") {
    const auto t = parse_tree("1(1 1(1 1(1)) 1(1(1)))");
    const auto r = uh_min(t);
    CHECK(uh_ordered(r.witness_order).uh == r.uh);
    CHECK(canonical_unordered(r.witness_order) == canonical_unordered(t));
    CHECK(uh_min_bruteforce(t) == r.uh);
}

TEST_CASE("ordering cost") {
    const std::vector<unsigned> none;
    CHECK(ordering_cost(none) == 1);
    const std::vector<unsigned> f{3, 1};
    CHECK(ordering_cost(f) == 4);
    const std::vector<unsigned> g{1, 3};
    CHECK(ordering_cost(g) == 5);
}

TEST_CASE("descending order is optimal for random child numbers") {
    // Exchange argument: sorting f descending minimises max_j (j + f_j).
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned> val(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<unsigned> f(1 + trial % 6);
        for (auto& x : f) {
            x = val(rng);
        }
        std::sort(f.begin(), f.end());
        unsigned best = ordering_cost(f);
        while (std::next_permutation(f.begin(), f.end())) {
            best = std::min(best, ordering_cost(f));
        }
        std::sort(f.begin(), f.end(), std::greater<>());
        CHECK(ordering_cost(f) == best);
    }
}

TEST_CASE("greedy matches brute force on all small shapes") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (const auto& shape : enumerate_plane_shapes(n)) {
            CHECK(uh_min(shape).uh == uh_min_bruteforce(shape));
            CHECK(uh_min(shape).uh >= max_degree(shape));
        }
    }
    CHECK_THROWS_AS(uh_min_bruteforce(leaning_tree(4)), GuardError);
}
