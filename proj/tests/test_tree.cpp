#include <set>

#include "doctest.h"

#include "leantree/errors.hpp"
#include "leantree/tree.hpp"

using namespace leantree;

TEST_CASE("leaning tree shape") {
    CHECK(leaning_tree(0).size() == 1);
    for (unsigned k = 0; k <= 12; ++k) {
        CHECK(leaning_tree(k).size() == (std::size_t{1} << k));
    }
    CHECK(format_tree(leaning_tree(2)) == "3(2(1) 1)");
    const auto t2 = adjacency_of(leaning_tree(2));
    // A 4-vertex path: two ends of degree 1, two inner vertices of degree 2.
    std::multiset<std::size_t> degrees;
    for (std::size_t v = 0; v < t2.vertex_count(); ++v) {
        degrees.insert(t2.degree(v));
    }
    CHECK(degrees == std::multiset<std::size_t>{1, 1, 2, 2});
    CHECK_THROWS_AS(leaning_tree(kLeaningTreeMaxOrder + 1), GuardError);
}

TEST_CASE("leaning tree degrees") {
    CHECK(max_degree(leaning_tree(1)) == 1);
    for (unsigned k = 2; k <= 12; ++k) {
        CHECK(max_children(leaning_tree(k)) == k);
        CHECK(max_degree(leaning_tree(k)) == k);
        CHECK(height(leaning_tree(k)) == k);
    }
}

TEST_CASE("leaning vertex navigation") {
    const auto r = LeaningVertex::root(3);
    CHECK(r.has_child(3));
    CHECK_FALSE(r.has_child(4));
    CHECK_FALSE(r.has_child(0));
    const auto c = r.child(1);
    CHECK(c.order == 2);
    CHECK(c.child(2).order == 0);
    CHECK(c.parent(3) == r);
    CHECK_THROWS_AS(r.parent(3), std::out_of_range);
    CHECK_THROWS_AS(c.child(2).child(1), std::out_of_range);
}

TEST_CASE("decreasing label predicate") {
    CHECK(is_decreasing(parse_tree("1"), 1));
    CHECK(is_decreasing(parse_tree("2(1)"), 2));
    CHECK_FALSE(is_decreasing(parse_tree("1(1)"), 2));
    CHECK(is_decreasing(parse_tree("3(2(1))"), 3));
    CHECK_FALSE(is_decreasing(parse_tree("4(2)"), 3));
}

TEST_CASE("enumeration") {
    CHECK(enumerate_decreasing_trees(1, 2).size() == 2);
    const auto six = enumerate_decreasing_trees(3, 3);
    CHECK(six.size() == 6);
    for (const auto& t : six) {
        CHECK(is_decreasing(t, 3));
        CHECK(t.size() == 3);
    }
    for (unsigned n = 2; n <= 6; ++n) {
        CHECK(enumerate_decreasing_trees(n, 1).empty());
    }
    CHECK_THROWS_AS(enumerate_decreasing_trees(kEnumerateMaxNodes + 1, 3), GuardError);
    CHECK_THROWS_AS(enumerate_decreasing_trees(3, kEnumerateMaxLabel + 1), GuardError);
    CHECK_NOTHROW(enumerate_decreasing_trees(3, kEnumerateMaxLabel + 1, {10, 10}));
}

TEST_CASE("plane shapes are Catalan") {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(enumerate_plane_shapes(n).size() == catalan[n - 1]);
    }
}

TEST_CASE("format and parse") {
    CHECK(format_tree(parse_tree("5")) == "5");
    LabelledPlaneTree t{3, {LabelledPlaneTree{2, {LabelledPlaneTree{1, {}}}}, LabelledPlaneTree{1, {}}}};
    CHECK(format_tree(t) == "3(2(1) 1)");
    CHECK(parse_tree("3(2(1) 1)") == t);
    for (const auto& x : enumerate_decreasing_trees(5, 4)) {
        CHECK(parse_tree(format_tree(x)) == x);
    }
}

TEST_CASE("parse errors carry positions") {
    const std::pair<const char*, std::size_t> bad[] = {
        {"", 0}, {"3(", 2}, {"3(2", 3}, {"3()", 2}, {"0", 0}, {"03", 0}, {"3(2  1)", 4}, {"3 ", 1}, {"3(2)x", 4},
    };
    for (const auto& [text, pos] : bad) {
        CAPTURE(text);
        try {
            parse_tree(text);
            FAIL("accepted");
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
        }
    }
}

TEST_CASE("deep trees parse without recursion limits") {
    std::string text;
    const int depth = 20000;
    for (int i = 0; i < depth; ++i) {
        text += "1(";
    }
    text += "1";
    text.append(depth, ')');
    CHECK(parse_tree(text).children.size() == 1);
}

TEST_CASE("canonical unordered form") {
    CHECK(canonical_unordered(parse_tree("3(1 2(1))")) == canonical_unordered(parse_tree("3(2(1) 1)")));
    CHECK_FALSE(canonical_unordered(parse_tree("1(1(1))")) == canonical_unordered(parse_tree("1(1 1)")));
}

TEST_CASE("adjacency is preorder") {
    const auto adj = adjacency_of(parse_tree("3(2(1) 1)"));
    CHECK(adj.vertex_count() == 4);
    CHECK(adj.degree(0) == 2);
    CHECK(adj.degree(1) == 2);
    CHECK(adj.degree(2) == 1);
    CHECK(adj.degree(3) == 1);
}
