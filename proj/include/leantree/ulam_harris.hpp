#pragma once

// Ulam-Harris number: give the root 1 and the children of a node labelled r
// the labels r+1, ..., r+s in order; the number is the largest label used.
// Only the tree shape matters here; input labels are carried along but ignored.

#include <cstdint>
#include <span>
#include <vector>

#include "leantree/tree.hpp"

namespace leantree {

struct UhReport {
    unsigned uh = 1;
    LabelledPlaneTree witness_order;      // input tree with children reordered
    std::vector<std::uint32_t> per_node;  // assigned labels, witness preorder
};

// Ulam-Harris number of the tree with its children in the given order.
UhReport uh_ordered(const LabelledPlaneTree& t);

// Minimum over all child orderings. Children are placed by descending minimal
// subtree number (ties broken by serialization), which is optimal by an
// exchange argument.
UhReport uh_min(const LabelledPlaneTree& t);

inline constexpr unsigned kUhBruteforceMaxNodes = 9;

// Minimum by trying every product of child permutations. Throws GuardError
// above max_nodes nodes.
unsigned uh_min_bruteforce(const LabelledPlaneTree& t, unsigned max_nodes = kUhBruteforceMaxNodes);

// max(1, max_j (j + f[j])) with positions j starting at 1: the Ulam-Harris
// number of a node whose children, in this order, have subtree numbers f.
unsigned ordering_cost(std::span<const unsigned> f);

// Tree with each node's label replaced by its Ulam-Harris label.
LabelledPlaneTree with_uh_labels(const UhReport& report);

}  // namespace leantree
