#include "leantree/ulam_harris.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "leantree/errors.hpp"

namespace leantree {

namespace {

void assign_labels(const LabelledPlaneTree& t, std::uint32_t label, UhReport& report) {
    report.per_node.push_back(label);
    report.uh = std::max<unsigned>(report.uh, label);
    std::uint32_t next = label;
    for (const auto& c : t.children) {
        assign_labels(c, ++next, report);
    }
}

struct MinResult {
    unsigned f;
    LabelledPlaneTree ordered;
};

MinResult minimise(const LabelledPlaneTree& t) {
    struct Keyed {
        unsigned f;
        std::string key;
        LabelledPlaneTree tree;
    };
    std::vector<Keyed> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) {
        auto [f, ordered] = minimise(c);
        kids.push_back({f, format_tree(ordered), std::move(ordered)});
    }
    std::sort(kids.begin(), kids.end(), [](const Keyed& a, const Keyed& b) {
        if (a.f != b.f) {
            return a.f > b.f;
        }
        return a.key < b.key;
    });
    MinResult out{1, {}};
    out.ordered.label = t.label;
    std::vector<unsigned> f;
    f.reserve(kids.size());
    for (auto& k : kids) {
        f.push_back(k.f);
        out.ordered.children.push_back(std::move(k.tree));
    }
    out.f = ordering_cost(f);
    return out;
}

// Index form: node 0 is the root, children[v] lists child ids in order.
struct IndexedTree {
    std::vector<std::vector<std::uint32_t>> children;
};

std::uint32_t index_tree(const LabelledPlaneTree& t, IndexedTree& out) {
    const auto id = static_cast<std::uint32_t>(out.children.size());
    out.children.emplace_back();
    for (const auto& c : t.children) {
        const auto cid = index_tree(c, out);
        out.children[id].push_back(cid);
    }
    return id;
}

unsigned indexed_uh(const IndexedTree& t) {
    unsigned best = 1;
    std::vector<std::pair<std::uint32_t, unsigned>> stack{{0, 1}};
    while (!stack.empty()) {
        const auto [v, label] = stack.back();
        stack.pop_back();
        best = std::max(best, label);
        unsigned next = label;
        for (const auto c : t.children[v]) {
            stack.emplace_back(c, ++next);
        }
    }
    return best;
}

}  // namespace

unsigned ordering_cost(std::span<const unsigned> f) {
    unsigned best = 1;
    for (std::size_t j = 0; j < f.size(); ++j) {
        best = std::max(best, static_cast<unsigned>(j + 1) + f[j]);
    }
    return best;
}

UhReport uh_ordered(const LabelledPlaneTree& t) {
    UhReport report;
    report.witness_order = t;
    report.per_node.reserve(t.size());
    assign_labels(t, 1, report);
    return report;
}

UhReport uh_min(const LabelledPlaneTree& t) {
    auto [f, ordered] = minimise(t);
    UhReport report = uh_ordered(ordered);
    if (report.uh != f) {
        throw std::logic_error("uh_min: witness does not reproduce the minimum");
    }
    return report;
}

unsigned uh_min_bruteforce(const LabelledPlaneTree& t, unsigned max_nodes) {
    if (t.size() > max_nodes) {
        throw GuardError("brute-force Ulam-Harris minimisation limited to " +
                         std::to_string(max_nodes) + " nodes");
    }
    IndexedTree tree;
    index_tree(t, tree);
    std::vector<std::uint32_t> branching;
    for (std::uint32_t v = 0; v < tree.children.size(); ++v) {
        if (tree.children[v].size() > 1) {
            std::sort(tree.children[v].begin(), tree.children[v].end());
            branching.push_back(v);
        }
    }
    unsigned best = indexed_uh(tree);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == branching.size()) {
            best = std::min(best, indexed_uh(tree));
            return;
        }
        auto& kids = tree.children[branching[i]];
        do {
            self(self, i + 1);
        } while (std::next_permutation(kids.begin(), kids.end()));
    };
    rec(rec, 0);
    return best;
}

namespace {

LabelledPlaneTree relabel(const LabelledPlaneTree& t, const std::vector<std::uint32_t>& labels,
                          std::size_t& next) {
    LabelledPlaneTree out;
    out.label = labels[next++];
    for (const auto& c : t.children) {
        out.children.push_back(relabel(c, labels, next));
    }
    return out;
}

}  // namespace

LabelledPlaneTree with_uh_labels(const UhReport& report) {
    std::size_t next = 0;
    return relabel(report.witness_order, report.per_node, next);
}

}  // namespace leantree
