#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace leantree {

// Rooted ordered (plane) tree with a positive integer label on every node.
struct LabelledPlaneTree {
    std::uint32_t label = 1;
    std::vector<LabelledPlaneTree> children;

    std::size_t size() const;

    friend bool operator==(const LabelledPlaneTree&, const LabelledPlaneTree&) = default;
};

inline constexpr unsigned kLeaningTreeMaxOrder = 24;
inline constexpr unsigned kEnumerateMaxNodes = 9;
inline constexpr unsigned kEnumerateMaxLabel = 7;

// The regular leaning tree T_k: root children are T_{k-1}, ..., T_0 from left
// to right, so child rank i of an order-m vertex has order m - i. Every node is
// labelled order + 1. Throws GuardError if k exceeds max_order.
LabelledPlaneTree leaning_tree(unsigned k, unsigned max_order = kLeaningTreeMaxOrder);

// Vertex of T_k addressed by its child-rank path from the root.
struct LeaningVertex {
    std::vector<std::uint32_t> path;
    std::uint32_t order = 0;

    static LeaningVertex root(unsigned k) { return {{}, k}; }
    bool has_child(std::uint32_t rank) const { return rank >= 1 && rank <= order; }
    // Throws std::out_of_range when !has_child(rank).
    LeaningVertex child(std::uint32_t rank) const;
    // Throws std::out_of_range at the root; needs the ambient order k.
    LeaningVertex parent(unsigned k) const;

    friend bool operator==(const LeaningVertex&, const LeaningVertex&) = default;
};

// Labels all in {1..k} and strictly decreasing from parent to child.
bool is_decreasing(const LabelledPlaneTree& t, unsigned k);

// Largest vertex degree in the underlying undirected tree.
unsigned max_degree(const LabelledPlaneTree& t);
unsigned max_children(const LabelledPlaneTree& t);
unsigned height(const LabelledPlaneTree& t);

// Bracket notation: `label(child child ...)`, a leaf is its bare label.
std::string format_tree(const LabelledPlaneTree& t);
// Throws ParseError with the offset of the first syntax error; rejects label 0.
LabelledPlaneTree parse_tree(std::string_view text);

// Every plane-tree shape on n nodes (all labels 1), in generation order.
std::vector<LabelledPlaneTree> enumerate_plane_shapes(unsigned n);

// Calls visit for every n-node decreasing tree with labels in {1..k}, in
// generation order (not canonical). Throws GuardError above the size guard.
struct EnumerationLimits {
    unsigned max_nodes = kEnumerateMaxNodes;
    unsigned max_label = kEnumerateMaxLabel;
};

void for_each_decreasing_tree(unsigned n, unsigned k,
                              const std::function<void(const LabelledPlaneTree&)>& visit,
                              EnumerationLimits limits = {});

// Every n-node decreasing tree with labels in {1..k}, each once, sorted by
// bracket serialization. Throws GuardError above the size guard.
std::vector<LabelledPlaneTree> enumerate_decreasing_trees(unsigned n, unsigned k,
                                                          EnumerationLimits limits = {});

// Shape-only canonical form: children sorted recursively by serialization
// (labels preserved). Two trees are the same unordered tree iff their canonical
// forms are equal.
LabelledPlaneTree canonical_unordered(const LabelledPlaneTree& t);

// Plain adjacency of the tree, vertices numbered in preorder (root is 0).
struct TreeAdjacency {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> neighbors;
    std::vector<std::int64_t> parent;  // -1 at the root

    std::size_t vertex_count() const { return offsets.size() - 1; }
    std::size_t degree(std::size_t v) const { return offsets[v + 1] - offsets[v]; }
};

TreeAdjacency adjacency_of(const LabelledPlaneTree& t);

}  // namespace leantree
