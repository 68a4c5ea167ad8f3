#pragma once
// Batch verification: each suite turns a family of countable claims into a
// deterministic pass/fail report with the measured counts kept in the check
// details. Budget overruns are recorded as exclusions, never silently
// dropped; an excluded check is not a verified check.

#include <string>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"

namespace recolor {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail; // measured values backing the verdict
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    std::vector<std::string> excluded; // skipped by budget, with reasons
    bool ok() const;                   // all checks pass; exclusions stay visible
};

struct CatalogEntry {
    std::string name;
    SimpleGraph base;
    int k = 0;
};

// The ten stock surplus (base, k) pairs the roundtrip suite replays.
std::vector<CatalogEntry> default_catalog();

// C_3 of townhouses: vertex counts 6(n+2), skeletons isomorphic to six
// disjoint paths P_{n+2}, the floor-path recurrence behind the counts, and
// edgeless basement variants for n <= 3.
SuiteReport verify_townhouse(int n_max = 5, const Budget& budget = Budget{});

// Chromatic-level collisions: distinct bases with isomorphic coloring graphs
// at their own chromatic numbers, including pairs with different chromatic
// numbers and a disconnected base against a connected one.
SuiteReport verify_chi_collisions(const Budget& budget = Budget{});

// Every graph on up to n_max vertices: C_chi(G) shares a certificate with
// C_3(C_5) only when G is the 5-cycle itself.
SuiteReport verify_c3c5_unique(int n_max = 5, const Budget& budget = Budget{});

// Strip each catalog coloring graph with seeds 1..3 and drive reconstruction,
// partition extraction and link-graph labeling against brute-force oracles
// built from the retained colorings.
SuiteReport verify_roundtrip(const std::vector<CatalogEntry>& catalog = default_catalog(),
                             int jobs = 1, const Budget& budget = Budget{});

// Certificates of surplus coloring graphs (chi < k <= chi + k_extra) never
// meet certificates of chromatic-level ones, and reconstruction aborts on
// every chromatic-level input.
SuiteReport verify_no_surplus_chi_collision(int n_max = 4, int k_extra = 2,
                                            const Budget& budget = Budget{});

std::string suite_report_to_json(const SuiteReport& r);

// One representative per isomorphism class of graphs on exactly n vertices,
// disconnected ones included, ordered by certificate. Built by extending
// every (n-1)-vertex representative with a new vertex joined to each
// neighbor subset, deduplicating canonically; class counts cross-check
// against 1, 2, 4, 11, 34, 156, 1044.
std::vector<SimpleGraph> all_graphs(int n, const Budget& budget = Budget{});

// True iff g contains an induced 5-cycle.
bool has_induced_c5(const SimpleGraph& g);

} // namespace recolor
