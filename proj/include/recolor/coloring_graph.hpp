#pragma once
// Coloring graphs: vertices are the proper k-colorings of a base graph, edges
// join colorings that differ on exactly one base vertex. Each edge carries the
// recolored base vertex and the two colors involved.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Proper coloring of some base graph; values are palette ids 1..k,
// vertex-indexed.
struct Coloring {
    std::vector<uint8_t> values;
    int k = 0;
};

// Raised when an operation that only makes sense above the chromatic level is
// asked about a palette with k <= chi(g).
class SurplusViolation : public std::invalid_argument {
  public:
    explicit SurplusViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct ColoringEdgeLabel {
    int base_vertex;
    uint8_t from_color; // color at the lower-id endpoint
    uint8_t to_color;   // color at the higher-id endpoint
};

struct LabeledColoringGraph {
    SimpleGraph skeleton;
    SimpleGraph base;
    int k = 0;
    std::vector<Coloring> phi;                  // skeleton id -> coloring
    std::vector<ColoringEdgeLabel> edge_labels; // parallel to skeleton.edges
};

// Induced hypercube witness: layer_map[mask] is the skeleton vertex whose
// subset of applied dimension moves is exactly `mask` over `dims`.
struct HypercubeWitness {
    int corner = -1;
    std::vector<int> dims; // neighbor ids of corner, one per dimension
    int antipode = -1;
    std::vector<int> layer_map; // size 1 << dims.size()
};

// All proper k-colorings in lexicographic order of their value vectors.
// Throws BudgetError once more than budget.max_colorings exist.
std::vector<Coloring> enumerate_colorings(const SimpleGraph& g, int k,
                                          const Budget& budget = Budget{});

LabeledColoringGraph build_coloring_graph(const SimpleGraph& g, int k,
                                          const Budget& budget = Budget{});

// Seeded pseudorandom relabeling of the skeleton: vertex v becomes
// strip_permutation(n, seed)[v]. Drops base graph, phi and labels.
std::vector<int> strip_permutation(int n, uint64_t seed);
SimpleGraph strip_labels(const LabeledColoringGraph& lcg, uint64_t seed);

// Colors in 1..k distinct from c(v) and absent from v's neighborhood.
std::vector<uint8_t> free_colors(const SimpleGraph& g, const Coloring& c, int v);

// True iff each component of g uses exactly chromatic_number(component)
// colors under c. Requires k > chi(g), else throws SurplusViolation.
bool is_link_coloring(const SimpleGraph& g, const Coloring& c);

// True iff the endpoints of every edge share at least one common free color.
bool is_weak_link_coloring(const SimpleGraph& g, const Coloring& c);

// Grow the hypercube with the given corner and one incident edge per
// dimension (dims are neighbor vertex ids of corner). Each deeper layer
// vertex must be the unique common neighbor of its predecessors; ambiguity
// raises StructuralError (it cannot occur in a genuine coloring graph), a
// missing completion returns nullopt.
std::optional<HypercubeWitness> hypercube_from_corner(const SimpleGraph& skeleton, int corner,
                                                      const std::vector<int>& dims);

// "121"-style rendering; colors above 9 are dot-separated.
std::string coloring_to_string(const Coloring& c);

std::string lcg_to_json(const LabeledColoringGraph& lcg);

// DOT rendering with link-coloring vertices highlighted and edges labeled by
// recolored vertex and color pair.
std::string lcg_to_dot(const LabeledColoringGraph& lcg);

} // namespace recolor
