#pragma once
// Recovers, at a surviving vertex alpha, how its cliques group into color
// classes. One partition per matrix component: the component's cliques are
// split into exactly chi(component) parts, and a candidate partition is kept
// only if every part is matrix-independent, spans a hypercube from alpha
// along the first selection's moves, and lands on an antipode that is itself
// a surviving vertex whose way back into the cube sits inside a single
// selection. Exactly one candidate survives per component on genuine input.

#include <string>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"
#include "recolor/link_detect.hpp"

namespace recolor {

struct ComponentPartition {
    std::vector<int> cliques;            // clique ids of this matrix component, ascending
    std::vector<std::vector<int>> parts; // partition of `cliques`; members ascending,
                                         // parts ordered by minimum member
    // part_antipodes[p][s]: vertex reached from alpha by applying selection
    // s across all of part p (the far corner of the part's hypercube). These
    // are the class moves the link-graph layer walks.
    std::vector<std::vector<int>> part_antipodes;
};

// Why candidate partitions die, for tests and --explain output.
struct PartitionDiagnostics {
    long long candidates = 0;             // independence-clean partitions fully built
    long long pruned_adjacent = 0;        // subtree cut: part gained a matrix-adjacent pair
    long long pruned_cube = 0;            // some part spans no hypercube
    long long pruned_antipode_absent = 0; // some part's antipode is not a surviving vertex
    long long pruned_antipode_moves = 0;  // antipode's in-cube neighbors fit no one selection
};

struct PartitionExtraction {
    int alpha = -1;
    std::vector<ComponentPartition> components; // aligned with the vertex analysis' components
    PartitionDiagnostics diagnostics;
};

// Throws std::invalid_argument if alpha is not in rep.A, StructuralError if
// any component ends with zero or several surviving partitions (cannot happen
// for a genuine coloring graph), BudgetError if enumeration outgrows
// budget.selection_steps.
PartitionExtraction extract_partition(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                      const Budget& budget = Budget{});

std::string partition_to_json(const PartitionExtraction& pe, bool explain = false);

} // namespace recolor
