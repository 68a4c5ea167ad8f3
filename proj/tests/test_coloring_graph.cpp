#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "recolor/coloring_graph.hpp"
#include "recolor/families.hpp"
#include "recolor/graph.hpp"
#include "recolor/iso.hpp"

using namespace recolor;

namespace {

// skeleton vertex id of the coloring spelled "121" etc.
int vid(const LabeledColoringGraph& lcg, const std::string& s) {
    for (size_t i = 0; i < lcg.phi.size(); i++)
        if (coloring_to_string(lcg.phi[i]) == s) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("[colorings] enumeration counts and order") {
    SimpleGraph p3 = named_graph("P3");
    auto cols = enumerate_colorings(p3, 3);
    REQUIRE(cols.size() == 12);
    CHECK(coloring_to_string(cols[0]) == "121");
    CHECK(coloring_to_string(cols[11]) == "323");
    CHECK(std::is_sorted(cols.begin(), cols.end(), [](const Coloring& a, const Coloring& b) {
        return a.values < b.values;
    }));
    for (const auto& c : cols) {
        CHECK(c.k == 3);
        CHECK(is_proper_coloring(p3, c.values));
    }

    CHECK(enumerate_colorings(named_graph("K3"), 3).size() == 6);
    CHECK(enumerate_colorings(named_graph("C5"), 3).size() == 30);
    CHECK(enumerate_colorings(named_graph("N2"), 2).size() == 4);
    CHECK(enumerate_colorings(named_graph("K3"), 2).empty());
}

TEST_CASE("[colorings] enumeration respects the budget") {
    Budget tiny;
    tiny.max_colorings = 100;
    CHECK_THROWS_AS(enumerate_colorings(named_graph("N10"), 2, tiny), BudgetError);
    CHECK(enumerate_colorings(named_graph("N2"), 2, tiny).size() == 4);
}

TEST_CASE("[cgraph] small coloring graph shapes") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("P3"), 3);
    CHECK(lcg.skeleton.n == 12);
    CHECK(lcg.skeleton.edge_count() == 15);
    CHECK(lcg.k == 3);

    // one recoloring step per edge
    REQUIRE(lcg.edge_labels.size() == lcg.skeleton.edges.size());
    for (size_t i = 0; i < lcg.skeleton.edges.size(); i++) {
        auto [u, v] = lcg.skeleton.edges[i];
        const auto& lab = lcg.edge_labels[i];
        int diffs = 0;
        for (int b = 0; b < lcg.base.n; b++)
            if (lcg.phi[u].values[b] != lcg.phi[v].values[b]) diffs++;
        CHECK(diffs == 1);
        CHECK(lcg.phi[u].values[lab.base_vertex] == lab.from_color);
        CHECK(lcg.phi[v].values[lab.base_vertex] == lab.to_color);
    }

    // colorings at the chromatic level of a complete graph never move
    CHECK(build_coloring_graph(named_graph("K3"), 3).skeleton.edge_count() == 0);
    CHECK(build_coloring_graph(named_graph("K3"), 3).skeleton.n == 6);

    CHECK(graph_isomorphic(build_coloring_graph(named_graph("N2"), 2).skeleton, named_graph("C4"))
              .has_value());
}

TEST_CASE("[cgraph] strip permutation is a seeded bijection") {
    auto perm = strip_permutation(50, 42);
    REQUIRE(perm.size() == 50);
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want(50);
    std::iota(want.begin(), want.end(), 0);
    CHECK(sorted == want);
    CHECK(perm == strip_permutation(50, 42));
    CHECK(perm != strip_permutation(50, 43));
}

TEST_CASE("[cgraph] strip relabels the skeleton exactly") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("C5"), 4);
    SimpleGraph stripped = strip_labels(lcg, 7);
    auto perm = strip_permutation(lcg.skeleton.n, 7);
    CHECK(stripped.n == lcg.skeleton.n);
    CHECK(stripped.edge_count() == lcg.skeleton.edge_count());
    for (auto [u, v] : lcg.skeleton.edges) CHECK(stripped.has_edge(perm[u], perm[v]));
}

TEST_CASE("[colorings] free colors") {
    SimpleGraph p3 = named_graph("P3");
    Coloring c{{1, 2, 1}, 3};
    CHECK(free_colors(p3, c, 0) == std::vector<uint8_t>{3});
    CHECK(free_colors(p3, c, 1) == std::vector<uint8_t>{3});
    Coloring rainbow{{1, 2, 3}, 3};
    CHECK(free_colors(p3, rainbow, 1).empty());
    Coloring wide{{1, 2, 1}, 5};
    CHECK(free_colors(p3, wide, 1) == std::vector<uint8_t>{3, 4, 5});
}

TEST_CASE("[colorings] link coloring predicate") {
    SimpleGraph p3 = named_graph("P3");
    CHECK(is_link_coloring(p3, Coloring{{1, 2, 1}, 3}));
    CHECK(!is_link_coloring(p3, Coloring{{1, 2, 3}, 3}));
    CHECK_THROWS_AS(is_link_coloring(p3, Coloring{{1, 2, 1}, 2}), SurplusViolation);

    // per component: each must use exactly its own chromatic count
    SimpleGraph two = disjoint_union(named_graph("K3"), named_graph("P3"));
    CHECK(is_link_coloring(two, Coloring{{1, 2, 3, 1, 2, 1}, 4}));
    CHECK(is_link_coloring(two, Coloring{{1, 2, 4, 4, 2, 4}, 4})); // any colors, right counts
    CHECK(!is_link_coloring(two, Coloring{{1, 2, 3, 1, 2, 3}, 4})); // path wastes a color
    CHECK(!is_link_coloring(two, Coloring{{1, 2, 3, 1, 2, 4}, 5}));
}

TEST_CASE("[colorings] weak link coloring predicate") {
    SimpleGraph p3 = named_graph("P3");
    CHECK(is_weak_link_coloring(p3, Coloring{{1, 2, 1}, 3}));
    CHECK(!is_weak_link_coloring(p3, Coloring{{1, 2, 3}, 3}));
    // with a fourth color the rainbow coloring becomes weak but stays non-link
    CHECK(is_weak_link_coloring(p3, Coloring{{1, 2, 3}, 4}));
    CHECK(!is_link_coloring(p3, Coloring{{1, 2, 3}, 4}));
}

TEST_CASE("[cgraph] hypercube completion from a corner") {
    LabeledColoringGraph sq = build_coloring_graph(named_graph("N2"), 2);
    int corner = vid(sq, "11");
    auto wit = hypercube_from_corner(sq.skeleton, corner, {vid(sq, "21"), vid(sq, "12")});
    REQUIRE(wit.has_value());
    CHECK(wit->antipode == vid(sq, "22"));
    CHECK(wit->layer_map.size() == 4);
    CHECK(wit->layer_map[0] == corner);

    LabeledColoringGraph p3 = build_coloring_graph(named_graph("P3"), 3);
    // moves at the two path ends close a square
    auto sq2 = hypercube_from_corner(p3.skeleton, vid(p3, "121"), {vid(p3, "321"), vid(p3, "123")});
    REQUIRE(sq2.has_value());
    CHECK(sq2->antipode == vid(p3, "323"));
    // an end move and the middle move do not
    CHECK(!hypercube_from_corner(p3.skeleton, vid(p3, "121"), {vid(p3, "321"), vid(p3, "131")})
               .has_value());

    // one-dimensional cube is just an edge
    auto edge = hypercube_from_corner(p3.skeleton, vid(p3, "121"), {vid(p3, "131")});
    REQUIRE(edge.has_value());
    CHECK(edge->antipode == vid(p3, "131"));

    // ambiguous completion outside a genuine coloring graph: in K_{2,3} the
    // square over corner 2 with dimensions 0 and 1 closes at both 3 and 4
    CHECK_THROWS_AS(hypercube_from_corner(named_graph("K2,3"), 2, {0, 1}), StructuralError);
}

TEST_CASE("[colorings] string rendering") {
    CHECK(coloring_to_string(Coloring{{1, 2, 1}, 3}) == "121");
    CHECK(coloring_to_string(Coloring{{}, 3}).empty());
    CHECK(coloring_to_string(Coloring{{1, 11, 2}, 12}) == "1.11.2");
}

TEST_CASE("[cgraph] json and dot output") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("P2"), 3);
    std::string j = lcg_to_json(lcg);
    CHECK(j.find("\"kind\":\"coloring_graph\"") != std::string::npos);
    CHECK(j.find("\"k\":3") != std::string::npos);
    std::string dot = lcg_to_dot(lcg);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("12") != std::string::npos); // coloring names on vertices
}
