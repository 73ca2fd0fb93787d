#include "leantree/tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "leantree/errors.hpp"

namespace leantree {

std::size_t LabelledPlaneTree::size() const {
    std::size_t n = 1;
    for (const auto& c : children) {
        n += c.size();
    }
    return n;
}

namespace {

LabelledPlaneTree build_leaning(unsigned k) {
    LabelledPlaneTree t;
    t.label = k + 1;
    t.children.reserve(k);
    for (unsigned j = k; j-- > 0;) {
        t.children.push_back(build_leaning(j));
    }
    return t;
}

}  // namespace

LabelledPlaneTree leaning_tree(unsigned k, unsigned max_order) {
    if (k > max_order) {
        throw GuardError("leaning tree order " + std::to_string(k) + " exceeds guard " +
                         std::to_string(max_order) + " (2^k nodes)");
    }
    return build_leaning(k);
}

LeaningVertex LeaningVertex::child(std::uint32_t rank) const {
    if (!has_child(rank)) {
        throw std::out_of_range("vertex of order " + std::to_string(order) + " has no child " +
                                std::to_string(rank));
    }
    LeaningVertex c{path, order - rank};
    c.path.push_back(rank);
    return c;
}

LeaningVertex LeaningVertex::parent(unsigned k) const {
    if (path.empty()) {
        throw std::out_of_range("root of T_k has no parent");
    }
    LeaningVertex p{path, 0};
    const std::uint32_t rank = p.path.back();
    p.path.pop_back();
    p.order = order + rank;
    if (p.path.empty() && p.order != k) {
        throw std::logic_error("inconsistent leaning vertex");
    }
    return p;
}

bool is_decreasing(const LabelledPlaneTree& t, unsigned k) {
    if (t.label < 1 || t.label > k) {
        return false;
    }
    return std::all_of(t.children.begin(), t.children.end(), [&](const LabelledPlaneTree& c) {
        return c.label < t.label && is_decreasing(c, k);
    });
}

namespace {

unsigned max_degree_impl(const LabelledPlaneTree& t, bool has_parent) {
    unsigned best = static_cast<unsigned>(t.children.size()) + (has_parent ? 1u : 0u);
    for (const auto& c : t.children) {
        best = std::max(best, max_degree_impl(c, true));
    }
    return best;
}

}  // namespace

unsigned max_degree(const LabelledPlaneTree& t) { return max_degree_impl(t, false); }

unsigned max_children(const LabelledPlaneTree& t) {
    unsigned best = static_cast<unsigned>(t.children.size());
    for (const auto& c : t.children) {
        best = std::max(best, max_children(c));
    }
    return best;
}

unsigned height(const LabelledPlaneTree& t) {
    unsigned h = 0;
    for (const auto& c : t.children) {
        h = std::max(h, 1 + height(c));
    }
    return h;
}

namespace {

void format_into(const LabelledPlaneTree& t, std::string& out) {
    out += std::to_string(t.label);
    if (t.children.empty()) {
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        format_into(t.children[i], out);
    }
    out += ')';
}

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    LabelledPlaneTree parse() {
        LabelledPlaneTree root;
        root.label = read_label();
        // Nodes whose '(' has been consumed and whose ')' has not.
        std::vector<LabelledPlaneTree*> open;
        LabelledPlaneTree* cur = &root;
        bool may_open = true;
        for (;;) {
            if (may_open && peek('(')) {
                ++pos_;
                open.push_back(cur);
                cur = &cur->children.emplace_back();
                cur->label = read_label();
                continue;
            }
            if (open.empty()) {
                if (pos_ != text_.size()) {
                    fail("unexpected trailing input");
                }
                return root;
            }
            if (peek(' ')) {
                ++pos_;
                cur = &open.back()->children.emplace_back();
                cur->label = read_label();
                may_open = true;
                continue;
            }
            if (peek(')')) {
                ++pos_;
                cur = open.back();
                open.pop_back();
                may_open = false;
                continue;
            }
            fail(pos_ == text_.size() ? "unterminated child list" : "expected ' ' or ')'");
        }
    }

private:
    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::uint32_t read_label() {
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
            fail("expected a label");
        }
        if (text_[pos_] == '0') {
            fail("labels must be positive integers without leading zeros");
        }
        std::uint64_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                fail("label out of range");
            }
            ++pos_;
        }
        return static_cast<std::uint32_t>(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Preorder child-count sequence -> tree; labels taken from the same preorder.
LabelledPlaneTree build_from_preorder(const std::vector<unsigned>& child_counts,
                                      const std::vector<std::uint32_t>& labels, std::size_t& next) {
    LabelledPlaneTree t;
    const std::size_t me = next++;
    t.label = labels[me];
    t.children.reserve(child_counts[me]);
    for (unsigned i = 0; i < child_counts[me]; ++i) {
        t.children.push_back(build_from_preorder(child_counts, labels, next));
    }
    return t;
}

// Calls visit(child_counts) for every Lukasiewicz word of length n: c_i >= 0,
// sum c_i = n - 1, and the open-slot count stays positive until the end.
void for_each_shape_sequence(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> counts(n);
    auto rec = [&](auto&& self, unsigned i, unsigned open_slots) -> void {
        // open_slots: subtrees still to be placed, including node i.
        if (i == n) {
            if (open_slots == 0) {
                visit(counts);
            }
            return;
        }
        const unsigned remaining_after = n - i - 1;
        const unsigned slots_after_me = open_slots - 1;
        for (unsigned c = 0; slots_after_me + c <= remaining_after; ++c) {
            if (slots_after_me + c == 0 && remaining_after > 0) {
                continue;
            }
            counts[i] = c;
            self(self, i + 1, slots_after_me + c);
        }
    };
    if (n > 0) {
        rec(rec, 0, 1);
    }
}

std::vector<std::int64_t> parents_from_preorder(const std::vector<unsigned>& child_counts) {
    std::vector<std::int64_t> parent(child_counts.size(), -1);
    // Stack of (node, children still to attach).
    std::vector<std::pair<std::size_t, unsigned>> stack;
    for (std::size_t v = 0; v < child_counts.size(); ++v) {
        if (!stack.empty()) {
            parent[v] = static_cast<std::int64_t>(stack.back().first);
            if (--stack.back().second == 0) {
                stack.pop_back();
            }
        }
        if (child_counts[v] > 0) {
            stack.emplace_back(v, child_counts[v]);
        }
    }
    return parent;
}

void check_enumeration_guard(unsigned n, unsigned k, EnumerationLimits limits) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument("tree enumeration needs n >= 1 and k >= 1");
    }
    if (n > limits.max_nodes || k > limits.max_label) {
        throw GuardError("decreasing-tree enumeration limited to n <= " +
                         std::to_string(limits.max_nodes) + ", k <= " +
                         std::to_string(limits.max_label));
    }
}

}  // namespace

std::string format_tree(const LabelledPlaneTree& t) {
    std::string out;
    format_into(t, out);
    return out;
}

LabelledPlaneTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::vector<LabelledPlaneTree> enumerate_plane_shapes(unsigned n) {
    std::vector<LabelledPlaneTree> shapes;
    for_each_shape_sequence(n, [&](const std::vector<unsigned>& counts) {
        std::vector<std::uint32_t> labels(n, 1);
        std::size_t next = 0;
        shapes.push_back(build_from_preorder(counts, labels, next));
    });
    return shapes;
}

void for_each_decreasing_tree(unsigned n, unsigned k,
                              const std::function<void(const LabelledPlaneTree&)>& visit,
                              EnumerationLimits limits) {
    check_enumeration_guard(n, k, limits);
    for_each_shape_sequence(n, [&](const std::vector<unsigned>& counts) {
        const auto parent = parents_from_preorder(counts);
        std::vector<std::uint32_t> labels(n);
        // Preorder guarantees a parent is labelled before its children.
        auto assign = [&](auto&& self, std::size_t v) -> void {
            if (v == n) {
                std::size_t next = 0;
                visit(build_from_preorder(counts, labels, next));
                return;
            }
            const std::uint32_t cap = parent[v] < 0 ? k : labels[parent[v]] - 1;
            for (std::uint32_t l = cap; l >= 1; --l) {
                labels[v] = l;
                self(self, v + 1);
            }
        };
        assign(assign, 0);
    });
}

std::vector<LabelledPlaneTree> enumerate_decreasing_trees(unsigned n, unsigned k,
                                                          EnumerationLimits limits) {
    std::vector<std::pair<std::string, LabelledPlaneTree>> keyed;
    for_each_decreasing_tree(
        n, k, [&](const LabelledPlaneTree& t) { keyed.emplace_back(format_tree(t), t); }, limits);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LabelledPlaneTree> out;
    out.reserve(keyed.size());
    for (auto& [key, tree] : keyed) {
        out.push_back(std::move(tree));
    }
    return out;
}

LabelledPlaneTree canonical_unordered(const LabelledPlaneTree& t) {
    std::vector<std::pair<std::string, LabelledPlaneTree>> keyed;
    keyed.reserve(t.children.size());
    for (const auto& c : t.children) {
        auto canon = canonical_unordered(c);
        keyed.emplace_back(format_tree(canon), std::move(canon));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    LabelledPlaneTree out;
    out.label = t.label;
    for (auto& [key, c] : keyed) {
        out.children.push_back(std::move(c));
    }
    return out;
}

TreeAdjacency adjacency_of(const LabelledPlaneTree& t) {
    TreeAdjacency adj;
    std::vector<std::vector<std::uint32_t>> lists;
    // Iterative preorder; each stack entry carries its parent id.
    std::vector<std::pair<const LabelledPlaneTree*, std::int64_t>> stack{{&t, -1}};
    while (!stack.empty()) {
        auto [node, parent] = stack.back();
        stack.pop_back();
        const auto id = static_cast<std::uint32_t>(lists.size());
        lists.emplace_back();
        adj.parent.push_back(parent);
        if (parent >= 0) {
            lists[static_cast<std::size_t>(parent)].push_back(id);
            lists[id].push_back(static_cast<std::uint32_t>(parent));
        }
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
            stack.emplace_back(&*it, id);
        }
    }
    adj.offsets.reserve(lists.size() + 1);
    adj.offsets.push_back(0);
    for (const auto& l : lists) {
        adj.neighbors.insert(adj.neighbors.end(), l.begin(), l.end());
        adj.offsets.push_back(static_cast<std::uint32_t>(adj.neighbors.size()));
    }
    return adj;
}

}  // namespace leantree
