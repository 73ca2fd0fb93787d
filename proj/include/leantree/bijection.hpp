#pragma once

// Closed root walks in the leaning tree T_k versus decreasing plane trees with
// root label k+1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leantree/tree.hpp"

namespace leantree {

// One step of a walk in T_k: descend to the rank-th child (1-indexed), or go up.
struct Move {
    std::uint32_t rank = 0;  // 0 encodes Up

    static constexpr Move down(std::uint32_t r) { return Move{r}; }
    static constexpr Move up() { return Move{0}; }
    constexpr bool is_up() const { return rank == 0; }

    friend constexpr bool operator==(Move, Move) = default;
};

struct Walk {
    unsigned order = 0;  // k of the ambient T_k
    std::vector<Move> moves;

    friend bool operator==(const Walk&, const Walk&) = default;
};

inline constexpr unsigned kWalkEnumMaxLength = 12;
inline constexpr unsigned kWalkEnumMaxOrder = 6;

// Throws InvalidWalk naming the offending move if the walk steps outside T_k or
// does not return to the root.
void validate_closed_walk(const Walk& w);

// Vertex sequence u_0, ..., u_{len} obtained by replaying the moves.
std::vector<LeaningVertex> walk_vertices(const Walk& w);

// Replays the walk, appending a child labelled j+1 whenever it descends into a
// vertex of order j. Output has moves/2 + 1 nodes and root label k+1.
LabelledPlaneTree build_tree_from_walk(const Walk& w);

// Inverse of build_tree_from_walk: a child labelled j+1 under a node labelled
// m+1 becomes Down(m - j). Walk order is root label - 1.
// Throws std::invalid_argument if the tree is not decreasing.
Walk build_walk_from_tree(const LabelledPlaneTree& t);

// Every closed root walk of the given even length in T_k. Order: depth-first
// with Down(1) < ... < Down(m) < Up at each step.
std::vector<Walk> enumerate_closed_walks(unsigned k, unsigned length,
                                         unsigned max_length = kWalkEnumMaxLength,
                                         unsigned max_order = kWalkEnumMaxOrder);

// `+i` for Down(i), `-` for Up, single spaces; empty walk is "".
std::string format_walk(const Walk& w);
Walk parse_walk(std::string_view text, unsigned order);

}  // namespace leantree
