#pragma once
// Graph isomorphism and canonical forms, exact at desk scale.
//
// Both operations are driven by equitable partition refinement followed by
// individualize-and-refine backtracking. The search tree is capped by
// Budget::iso_nodes; exceeding the cap raises BudgetError rather than
// returning a wrong answer.

#include <optional>
#include <string>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Witness mapping a-vertex -> b-vertex if the graphs are isomorphic,
// std::nullopt otherwise. The witness is verified edge-exactly before return.
std::optional<std::vector<int>> graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                                                 const Budget& budget = Budget{});

// Canonical certificate: byte string equal for two graphs iff they are
// isomorphic. Disconnected graphs are certified as the sorted multiset of
// their component certificates.
std::string canonical_certificate(const SimpleGraph& g, const Budget& budget = Budget{});

// Stable equitable partition (coarsest refinement of the degree partition),
// returned as ordered cells of vertex ids. Cell order is isomorphism
// invariant. Exposed for tests and for the structure analysis in link_detect.
std::vector<std::vector<int>> refine_partition(const SimpleGraph& g);

} // namespace recolor
