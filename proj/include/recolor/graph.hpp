#pragma once
// Simple undirected graphs: construction, components, chromatic number,
// and JSON / graph6 / DOT serialization.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recolor/common.hpp"

namespace recolor {

// Finite simple graph on vertices 0..n-1. Edges are stored as ordered pairs
// (u < v), sorted and deduplicated by the constructor. Instances are treated
// as immutable after construction; the adjacency structures are precomputed.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;     // sorted neighbor lists
    std::vector<std::string> names;        // optional vertex names, presentation only

    SimpleGraph() = default;
    SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;

    // Row-major adjacency bitset, words_per_row() 64-bit words per vertex.
    const std::vector<uint64_t>& bits() const { return bits_; }
    int words_per_row() const { return words_; }
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

  private:
    std::vector<uint64_t> bits_;
    int words_ = 0;
};

// Connected components as sorted vertex lists, ordered by minimum vertex id.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

// Induced subgraph on the given (sorted or unsorted) vertex set. The i-th
// vertex of the result is verts[i] after sorting.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<int> verts);

// Disjoint union; vertices of b are shifted by a.n.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Exact chromatic number via clique lower bound plus DSATUR-ordered
// backtracking. Intended for instances up to a few dozen vertices.
int chromatic_number(const SimpleGraph& g);

// True if assigning colors[v] (any integers) to each vertex is proper.
bool is_proper_coloring(const SimpleGraph& g, const std::vector<uint8_t>& colors);

// --- serialization ---------------------------------------------------------

// JSON object {"kind":"graph","n":...,"edges":[[u,v],...]} (+"names" if set).
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const std::string& text);

// graph6 format, n <= 62 supported.
std::string graph_to_graph6(const SimpleGraph& g);
SimpleGraph graph_from_graph6(const std::string& line);

// Accepts either JSON (first non-space byte '{') or graph6.
SimpleGraph graph_from_text(const std::string& text);

// Graphviz output. highlight vertices are drawn filled; edge_labels, when
// given, must be parallel to g.edges.
std::string graph_to_dot(const SimpleGraph& g,
                         const std::vector<int>& highlight = {},
                         const std::vector<std::string>& edge_labels = {});

} // namespace recolor
