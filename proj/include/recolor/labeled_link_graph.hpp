#pragma once
// The link graph at a surviving vertex alpha: vertices are everything
// reachable from alpha by class moves (recolor one whole part to a shared
// free color, i.e. jump to the antipode of that part's hypercube), edges are
// the moves themselves. Each edge learns which part moved and the part's
// color on both sides, in a canonical palette fixed at alpha: component i
// names its free colors 1..f_i in selection order and its part colors
// f_i+1..f_i+chi_i in part order. Labels spread outward by breadth-first
// search; every reachable vertex re-derives them from an already-labeled
// neighbor through triangle, square and six-cycle closures, and any
// disagreement with a previously assigned label is a StructuralError.

#include <array>
#include <string>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"
#include "recolor/link_detect.hpp"
#include "recolor/partition_extract.hpp"

namespace recolor {

// Label of one link-graph edge: part `part` of component `comp` (indices in
// the anchor's frame) changes color across the edge.
struct LinkEdgeLabel {
    int comp = -1;
    int part = -1;
    int color_u = -1; // part's color at the lower skeleton endpoint
    int color_v = -1; // part's color at the higher skeleton endpoint
};

struct LabeledLinkGraph {
    int anchor = -1;        // starting vertex, as an input-graph id
    int k = 0;              // palette size, agrees with the reconstruction
    std::vector<int> verts; // input-graph ids, ascending; skeleton vertex i = verts[i]
    SimpleGraph skeleton;
    std::vector<LinkEdgeLabel> edge_labels;    // parallel to skeleton.edges
    std::vector<int> chi;                      // parts per component (anchor frame)
    std::vector<int> f;                        // free colors per component
    std::vector<std::vector<int>> part_sizes;  // [comp][part]
    // part_colors[skeleton id][comp][part]: the part's color at that vertex,
    // in the canonical palette
    std::vector<std::vector<std::vector<int>>> part_colors;
    PartitionExtraction partition; // the anchor's class partition
};

// Vertices reachable from alpha by class moves, ascending. Cheaper than
// build_link_graph when only the class itself matters.
std::vector<int> equivalence_class(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                   const Budget& budget = Budget{});

// Throws std::invalid_argument if alpha is not in rep.A; StructuralError if
// label propagation meets a contradiction or a closure that should be unique
// is not.
LabeledLinkGraph build_link_graph(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                  const Budget& budget = Budget{});

// The three interior vertices of the one length-4 class-move path from alpha1
// to alpha2 that avoids alpha. Requires alpha1 and alpha2 to be class moves
// of alpha sending two different parts of the same component to the same free
// color (std::invalid_argument otherwise); a missing or ambiguous path is a
// StructuralError.
std::array<int, 3> unique_avoiding_path(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                        int alpha1, int alpha2, const Budget& budget = Budget{});

std::string llg_to_json(const LabeledLinkGraph& llg);
std::string llg_to_dot(const LabeledLinkGraph& llg);

} // namespace recolor
