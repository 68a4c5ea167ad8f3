#pragma once
// Parameterized base-graph families used throughout the test corpus and CLI.

#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Row of n houses. House 1 is a 4-cycle A,B,C,D (ids 0..3) with roof apex R
// (id 4) over the wall C-D. Each later house reuses the previous house's
// right wall (its B,C become the new A,D), adds floor corner B_i, wall top
// C_i and apex R_i, and a gable edge joins consecutive apexes. Total: 3n+2
// vertices, 6n edges.
SimpleGraph townhouse(int n);

// townhouse(n) plus one basement vertex per house, adjacent to that house's
// two floor corners. 4n+2 vertices.
SimpleGraph basement_townhouse(int n);

// Join of a fresh apex vertex (id g.n) to every vertex of g.
SimpleGraph cone(const SimpleGraph& g);

// Small named graphs: "K<n>", "C<n>", "P<n>", "N<r>", "K<r>,<s>", "paw",
// "house", "diamond", "F<m>" (m triangles sharing one hub). Case-insensitive
// family letter. Throws std::invalid_argument for unknown names or bad
// parameters.
SimpleGraph named_graph(const std::string& name);

} // namespace recolor
