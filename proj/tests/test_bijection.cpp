#include <set>

#include "doctest.h"

#include "leantree/bijection.hpp"
#include "leantree/errors.hpp"
#include "leantree/series.hpp"

using namespace leantree;

namespace {

Walk walk(unsigned k, std::initializer_list<std::uint32_t> ranks) {
    Walk w{k, {}};
    for (auto r : ranks) {
        w.moves.push_back(Move{r});
    }
    return w;
}

}  // namespace

TEST_CASE("walk to tree examples") {
    CHECK(format_tree(build_tree_from_walk(Walk{4, {}})) == "5");
    CHECK(format_tree(build_tree_from_walk(walk(2, {1, 1, 0, 0}))) == "3(2(1))");
    CHECK(format_tree(build_tree_from_walk(walk(2, {2, 0, 2, 0}))) == "3(1 1)");
}

TEST_CASE("tree to walk examples") {
    CHECK(build_walk_from_tree(parse_tree("5")) == Walk{4, {}});
    CHECK(build_walk_from_tree(parse_tree("3(2(1))")) == walk(2, {1, 1, 0, 0}));
    CHECK(build_walk_from_tree(parse_tree("3(1 1)")) == walk(2, {2, 0, 2, 0}));
    CHECK_THROWS_AS(build_walk_from_tree(parse_tree("3(3)")), std::invalid_argument);
}

TEST_CASE("closed walk enumeration") {
    for (unsigned k = 0; k <= 5; ++k) {
        const auto empty = enumerate_closed_walks(k, 0);
        REQUIRE(empty.size() == 1);
        CHECK(empty[0].moves.empty());
        CHECK(enumerate_closed_walks(k, 2).size() == k);
    }
    CHECK(enumerate_closed_walks(2, 2) == std::vector<Walk>{walk(2, {1, 0}), walk(2, {2, 0})});
    CHECK_THROWS_AS(enumerate_closed_walks(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_closed_walks(2, kWalkEnumMaxLength + 2), GuardError);
    CHECK_THROWS_AS(enumerate_closed_walks(kWalkEnumMaxOrder + 1, 2), GuardError);
}

TEST_CASE("walk counts match the counting sequence") {
    for (unsigned k = 0; k <= 4; ++k) {
        for (unsigned n = 0; n <= 5; ++n) {
            CHECK(BigInt(enumerate_closed_walks(k, 2 * n).size()) == count_with_root_label(n + 1, k + 1));
        }
    }
}

TEST_CASE("round trips") {
    for (unsigned len = 0; len <= 8; len += 2) {
        for (const auto& w : enumerate_closed_walks(3, len)) {
            const auto t = build_tree_from_walk(w);
            CHECK(t.size() == len / 2 + 1);
            CHECK(build_walk_from_tree(t) == w);
        }
    }
}

TEST_CASE("invalid walks name the move") {
    auto index_of = [](const Walk& w) -> std::size_t {
        try {
            validate_closed_walk(w);
        } catch (const InvalidWalk& e) {
            return e.move_index();
        }
        return 999;
    };
    CHECK(index_of(walk(2, {0})) == 0);
    CHECK(index_of(walk(2, {1, 2, 0, 0})) == 1);
    CHECK(index_of(walk(2, {1})) == 1);
    CHECK(index_of(walk(2, {1, 0})) == 999);
    CHECK_THROWS_AS(build_tree_from_walk(walk(1, {2, 0})), InvalidWalk);
}

TEST_CASE("walk vertices replay the path") {
    const auto seq = walk_vertices(walk(3, {1, 2, 0, 0}));
    REQUIRE(seq.size() == 5);
    CHECK(seq[1].order == 2);
    CHECK(seq[2].order == 0);
    CHECK(seq[4] == LeaningVertex::root(3));
}

TEST_CASE("walk text format") {
    const auto w = walk(2, {1, 1, 0, 0});
    CHECK(format_walk(w) == "+1 +1 - -");
    CHECK(parse_walk("+1 +1 - -", 2) == w);
    CHECK(parse_walk("", 4) == Walk{4, {}});
    CHECK(format_walk(Walk{4, {}}).empty());
    auto position = [](const char* text) -> std::size_t {
        try {
            parse_walk(text, 3);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    CHECK(position("+1  -") == 3);
    CHECK(position("+0 -") == 1);
    CHECK(position("+ -") == 1);
    CHECK(position("x") == 0);
    CHECK(position("+1 -x") == 4);
    CHECK(position("+1 ") == 3);
}
