#include "leantree/bijection.hpp"

#include <limits>
#include <stdexcept>

#include "leantree/errors.hpp"

namespace leantree {

void validate_closed_walk(const Walk& w) {
    // Orders of the vertices on the current root path.
    std::vector<std::uint32_t> orders{w.order};
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        const Move m = w.moves[i];
        if (m.is_up()) {
            if (orders.size() == 1) {
                throw InvalidWalk("Up move at the root", i);
            }
            orders.pop_back();
        } else {
            if (m.rank > orders.back()) {
                throw InvalidWalk("Down(" + std::to_string(m.rank) + ") from a vertex of order " +
                                      std::to_string(orders.back()),
                                  i);
            }
            orders.push_back(orders.back() - m.rank);
        }
    }
    if (orders.size() != 1) {
        throw InvalidWalk("walk does not return to the root", w.moves.size());
    }
}

std::vector<LeaningVertex> walk_vertices(const Walk& w) {
    std::vector<LeaningVertex> seq{LeaningVertex::root(w.order)};
    seq.reserve(w.moves.size() + 1);
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        const auto& u = seq.back();
        const Move m = w.moves[i];
        if (m.is_up()) {
            if (u.path.empty()) {
                throw InvalidWalk("Up move at the root", i);
            }
            seq.push_back(u.parent(w.order));
        } else {
            if (!u.has_child(m.rank)) {
                throw InvalidWalk("no such child", i);
            }
            seq.push_back(u.child(m.rank));
        }
    }
    return seq;
}

LabelledPlaneTree build_tree_from_walk(const Walk& w) {
    validate_closed_walk(w);
    LabelledPlaneTree root;
    root.label = w.order + 1;
    // Path of tree nodes mirroring the current vertex of T_k; a node labelled
    // j+1 sits over a vertex of order j.
    std::vector<LabelledPlaneTree*> path{&root};
    for (const Move m : w.moves) {
        if (m.is_up()) {
            path.pop_back();
            continue;
        }
        LabelledPlaneTree& v = *path.back();
        const std::uint32_t j = (v.label - 1) - m.rank;
        LabelledPlaneTree& child = v.children.emplace_back();
        child.label = j + 1;
        path.push_back(&child);
    }
    return root;
}

Walk build_walk_from_tree(const LabelledPlaneTree& t) {
    if (t.label < 1) {
        throw std::invalid_argument("tree labels must be positive");
    }
    Walk w;
    w.order = t.label - 1;
    // Euler tour: each frame is (node, index of next child to visit).
    std::vector<std::pair<const LabelledPlaneTree*, std::size_t>> stack{{&t, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next == node->children.size()) {
            stack.pop_back();
            if (!stack.empty()) {
                w.moves.push_back(Move::up());
            }
            continue;
        }
        const LabelledPlaneTree& child = node->children[next++];
        if (child.label < 1 || child.label >= node->label) {
            throw std::invalid_argument("labels must strictly decrease: child " +
                                        std::to_string(child.label) + " under " +
                                        std::to_string(node->label));
        }
        w.moves.push_back(Move::down(node->label - child.label));
        stack.emplace_back(&child, 0);
    }
    return w;
}

std::vector<Walk> enumerate_closed_walks(unsigned k, unsigned length, unsigned max_length,
                                         unsigned max_order) {
    if (length % 2 != 0) {
        throw std::invalid_argument("closed walks have even length");
    }
    if (length > max_length || k > max_order) {
        throw GuardError("closed-walk enumeration limited to length <= " +
                         std::to_string(max_length) + ", k <= " + std::to_string(max_order));
    }
    std::vector<Walk> out;
    Walk cur{k, {}};
    std::vector<std::uint32_t> orders{k};
    auto rec = [&](auto&& self) -> void {
        const std::size_t depth = orders.size() - 1;
        const std::size_t left = length - cur.moves.size();
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        // Need room to climb back: depth + 1 <= left - 1 after a descent.
        if (depth + 2 <= left) {
            const std::uint32_t m = orders.back();
            for (std::uint32_t r = 1; r <= m; ++r) {
                cur.moves.push_back(Move::down(r));
                orders.push_back(m - r);
                self(self);
                orders.pop_back();
                cur.moves.pop_back();
            }
        }
        if (depth > 0) {
            const std::uint32_t saved = orders.back();
            cur.moves.push_back(Move::up());
            orders.pop_back();
            self(self);
            orders.push_back(saved);
            cur.moves.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::string format_walk(const Walk& w) {
    std::string out;
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        if (w.moves[i].is_up()) {
            out += '-';
        } else {
            out += '+';
            out += std::to_string(w.moves[i].rank);
        }
    }
    return out;
}

Walk parse_walk(std::string_view text, unsigned order) {
    Walk w{order, {}};
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (!w.moves.empty()) {
            if (text[pos] != ' ') {
                throw ParseError("expected a single space between moves", pos);
            }
            ++pos;
        }
        if (pos >= text.size()) {
            throw ParseError("expected a move", pos);
        }
        if (text[pos] == '-') {
            w.moves.push_back(Move::up());
            ++pos;
            continue;
        }
        if (text[pos] != '+') {
            throw ParseError("expected '+i' or '-'", pos);
        }
        const std::size_t start = ++pos;
        std::uint64_t rank = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            rank = rank * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (rank > std::numeric_limits<std::uint32_t>::max()) {
                throw ParseError("child rank out of range", start);
            }
            ++pos;
        }
        if (pos == start || rank == 0 || text[start] == '0') {
            throw ParseError("child rank must be a positive integer", start);
        }
        w.moves.push_back(Move::down(static_cast<std::uint32_t>(rank)));
    }
    return w;
}

}  // namespace leantree
