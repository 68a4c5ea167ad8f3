#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/iso.hpp"

using namespace recolor;

namespace {

SimpleGraph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
    return SimpleGraph(n, e);
}

SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) e.push_back({i, j});
    return SimpleGraph(n, e);
}

SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) e.push_back({perm[u], perm[v]});
    return SimpleGraph(g.n, e);
}

// Smallest k admitting a proper coloring, by plain backtracking. Slow but
// obviously correct; used to cross-check chromatic_number.
bool brute_colorable(const SimpleGraph& g, int k, std::vector<uint8_t>& col, int v) {
    if (v == g.n) return true;
    for (int c = 1; c <= k; c++) {
        bool ok = true;
        for (int u : g.adj[v])
            if (u < v && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = static_cast<uint8_t>(c);
        if (brute_colorable(g, k, col, v + 1)) return true;
    }
    return false;
}

int brute_chromatic(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    for (int k = 1;; k++) {
        std::vector<uint8_t> col(g.n, 0);
        if (brute_colorable(g, k, col, 0)) return k;
    }
}

bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges)
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("[graph] constructor sorts and deduplicates") {
    SimpleGraph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}, {1, 0}});
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(0, 3));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.adj[1] == std::vector<int>{0, 2});
}

TEST_CASE("[graph] constructor rejects bad input") {
    CHECK_THROWS_AS(SimpleGraph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("[graph] adjacency bitset matches edge list") {
    SimpleGraph g = cycle(70); // two words per row
    CHECK(g.words_per_row() == 2);
    for (int u = 0; u < g.n; u++)
        for (int v = 0; v < g.n; v++) {
            bool bit = (g.row(u)[v / 64] >> (v % 64)) & 1;
            CHECK(bit == g.has_edge(u, v));
        }
}

TEST_CASE("[graph] connected components ordered by minimum vertex") {
    SimpleGraph g(7, {{4, 5}, {5, 6}, {1, 2}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[1] == std::vector<int>{1, 2});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5, 6});

    CHECK(connected_components(SimpleGraph(0, {})).empty());
    CHECK(connected_components(complete(4)).size() == 1);
}

TEST_CASE("[graph] induced subgraph relabels in sorted order") {
    SimpleGraph g = cycle(5);
    SimpleGraph h = induced_subgraph(g, {3, 0, 4}); // vertices 0,3,4 -> 0,1,2
    CHECK(h.n == 3);
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    SimpleGraph empty = induced_subgraph(g, {});
    CHECK(empty.n == 0);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("[graph] disjoint union shifts the second operand") {
    SimpleGraph u = disjoint_union(complete(3), path(2));
    CHECK(u.n == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(3, 4));
    CHECK(!u.has_edge(2, 3));
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[1] == std::vector<int>{3, 4});
}

TEST_CASE("[graph] chromatic number on known graphs") {
    CHECK(chromatic_number(SimpleGraph(0, {})) == 0);
    CHECK(chromatic_number(SimpleGraph(5, {})) == 1);
    CHECK(chromatic_number(path(4)) == 2);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(complete(7)) == 7);
    // K_{3,3}
    SimpleGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(chromatic_number(k33) == 2);
    // Petersen graph
    SimpleGraph pet(10, {{0, 1},
                         {1, 2},
                         {2, 3},
                         {3, 4},
                         {4, 0},
                         {0, 5},
                         {1, 6},
                         {2, 7},
                         {3, 8},
                         {4, 9},
                         {5, 7},
                         {7, 9},
                         {9, 6},
                         {6, 8},
                         {8, 5}});
    CHECK(chromatic_number(pet) == 3);
}

TEST_CASE("[graph] chromatic number agrees with brute force on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; trial++) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (rng() % 2) e.push_back({i, j});
        SimpleGraph g(n, e);
        CHECK(chromatic_number(g) == brute_chromatic(g));
    }
}

TEST_CASE("[graph] proper coloring check") {
    SimpleGraph g = path(3);
    CHECK(is_proper_coloring(g, {1, 2, 1}));
    CHECK(!is_proper_coloring(g, {1, 1, 2}));
    CHECK(is_proper_coloring(g, {5, 9, 5}));
    CHECK_THROWS_AS(is_proper_coloring(g, {1, 2}), std::invalid_argument);
}

TEST_CASE("[graph] json round trip") {
    SimpleGraph g = cycle(5);
    SimpleGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);

    SimpleGraph named(2, {{0, 1}});
    named.names = {"left", "right"};
    SimpleGraph nb = graph_from_json(graph_to_json(named));
    CHECK(nb.names == std::vector<std::string>{"left", "right"});

    CHECK_THROWS_AS(graph_from_json("{\"kind\":\"graph\"}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"kind\":\"partition\",\"n\":1,\"edges\":[]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
}

TEST_CASE("[graph] graph6 round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; trial++) {
        int n = static_cast<int>(rng() % 13);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (rng() % 3 == 0) e.push_back({i, j});
        SimpleGraph g(n, e);
        SimpleGraph back = graph_from_graph6(graph_to_graph6(g));
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
    // K_3 in standard encoding
    CHECK(graph_to_graph6(complete(3)) == "Bw");
    CHECK(graph_from_graph6("Bw").edge_count() == 3);

    CHECK_THROWS_AS(graph_to_graph6(SimpleGraph(63, {})), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_graph6("B"), std::invalid_argument);
}

TEST_CASE("[graph] text autodetect picks json or graph6") {
    SimpleGraph g = path(4);
    CHECK(graph_from_text(graph_to_json(g)).edges == g.edges);
    CHECK(graph_from_text(graph_to_graph6(g)).edges == g.edges);
    CHECK(graph_from_text("  \n " + graph_to_json(g)).n == 4);
    CHECK_THROWS_AS(graph_from_text(""), std::invalid_argument);
}

TEST_CASE("[graph] dot output mentions vertices and edges") {
    SimpleGraph g = path(3);
    g.names = {"a", "b", "c"};
    std::string dot = graph_to_dot(g, {1}, {"x", "y"});
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("b") != std::string::npos);
    CHECK(dot.find("x") != std::string::npos);
}

TEST_CASE("[iso] witness is a verified mapping") {
    SimpleGraph a = cycle(6);
    SimpleGraph b = permuted(a, {3, 1, 4, 0, 5, 2});
    auto w = graph_isomorphic(a, b);
    REQUIRE(w.has_value());
    for (auto [u, v] : a.edges) CHECK(b.has_edge((*w)[u], (*w)[v]));

    CHECK(!graph_isomorphic(cycle(5), path(5)).has_value());
    CHECK(!graph_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))).has_value());
}

TEST_CASE("[iso] certificate invariant under relabeling") {
    SimpleGraph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 6}, {6, 4}});
    std::string cert = canonical_certificate(g);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 8; trial++) {
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_certificate(permuted(g, perm)) == cert);
    }
    CHECK(canonical_certificate(cycle(5)) != canonical_certificate(path(5)));
}

TEST_CASE("[iso] disconnected certificate ignores component order") {
    SimpleGraph a = disjoint_union(complete(3), path(2));
    SimpleGraph b = disjoint_union(path(2), complete(3));
    CHECK(canonical_certificate(a) == canonical_certificate(b));
    CHECK(graph_isomorphic(a, b).has_value());
}

TEST_CASE("[iso] agrees with brute force on every 4-vertex graph") {
    // All 2^6 labeled graphs on 4 vertices, grouped by brute-force testing.
    std::vector<std::pair<int, int>> slots = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<SimpleGraph> reps;
    for (int mask = 0; mask < 64; mask++) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 6; i++)
            if (mask & (1 << i)) e.push_back(slots[i]);
        SimpleGraph g(4, e);
        bool fresh = true;
        for (const auto& r : reps)
            if (brute_isomorphic(r, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    CHECK(reps.size() == 11);
    for (size_t i = 0; i < reps.size(); i++)
        for (size_t j = 0; j < reps.size(); j++) {
            bool brute = brute_isomorphic(reps[i], reps[j]);
            CHECK(graph_isomorphic(reps[i], reps[j]).has_value() == brute);
            CHECK((canonical_certificate(reps[i]) == canonical_certificate(reps[j])) == brute);
        }
}

TEST_CASE("[iso] budget cap raises instead of guessing") {
    Budget tiny;
    tiny.iso_nodes = 1;
    SimpleGraph g = cycle(24);
    CHECK_THROWS_AS(canonical_certificate(g, tiny), BudgetError);
}

TEST_CASE("[iso] equitable refinement cells") {
    auto cells = refine_partition(cycle(5));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].size() == 5);

    cells = refine_partition(path(4)); // ends vs middles
    REQUIRE(cells.size() == 2);
    std::set<std::set<int>> got;
    for (auto& c : cells) got.insert(std::set<int>(c.begin(), c.end()));
    CHECK(got == std::set<std::set<int>>{{0, 3}, {1, 2}});

    // star: center separates from leaves
    SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    cells = refine_partition(star);
    REQUIRE(cells.size() == 2);
}
