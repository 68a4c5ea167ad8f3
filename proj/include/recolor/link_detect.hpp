#pragma once
// Base-graph reconstruction from an unlabeled coloring graph, and the
// identification of its abstract link vertices.
//
// The entry point is reconstruct_base(): an eight-stage filter that keeps the
// vertices whose local structure is richest (clique count, missing spanning
// squares, one-per-clique selection count), reads off a base graph G and
// palette size k from the survivors, and accepts only if the input is
// isomorphic to the coloring graph it itself predicts. Failure is a value
// (Abort), not an exception: census code treats aborts as data.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recolor/common.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Neighborhood of `center` split into maximal cliques, ordered by minimum
// member id. Only defined when the neighborhood induces a disjoint union of
// cliques.
struct CliqueDecomposition {
    int center = -1;
    std::vector<std::vector<int>> cliques;
};

// Everything reconstruct_base() learns about one surviving vertex. Kept
// around because the partition and link-graph layers replay it constantly.
struct VertexAnalysis {
    CliqueDecomposition dec;
    std::vector<int> t;                                    // clique sizes
    std::vector<uint8_t> matrix;                           // missing-square matrix, n*n row-major
    std::vector<std::vector<int>> components;              // matrix components (clique indices)
    std::vector<std::vector<std::vector<int>>> selections; // per component, lexicographic;
                                                           // a selection holds one neighbor id
                                                           // per clique of that component
    long long missing_pairs = 0;                           // clique pairs with missing squares

    int selection_count() const {
        int s = 0;
        for (const auto& c : selections) s += static_cast<int>(c.size());
        return s;
    }
};

struct LinkReport {
    std::vector<int> A; // surviving vertices, ascending
    int n = 0;          // cliques per survivor
    long long m = 0;    // missing-square pair count per survivor
    int f = 0;          // total selections per survivor
    int k = 0;          // recovered palette size
    SimpleGraph base;   // recovered base graph; vertex i is clique i of the chosen survivor
    std::vector<std::vector<int>> base_components;
    std::vector<int> chi; // chromatic number per base component
    std::map<int, VertexAnalysis> per_alpha;
    int distinct_matrix_certs = 0;
    // attrition: candidate counts after the successive filters
    int count_step_cliques = 0, count_step_max_cliques = 0;
    int count_step_squares = 0, count_step_selections = 0;
};

struct Abort {
    enum class Stage { no_candidates, non_integral_k, iso_check_failed };
    Stage stage;
    std::string detail;
    std::optional<SimpleGraph> candidate_base;
    int candidate_k = 0;
    int count_step_cliques = 0, count_step_max_cliques = 0;
    int count_step_squares = 0, count_step_selections = 0;
};

const char* abort_stage_name(Abort::Stage s);

using ReconstructionResult = std::variant<LinkReport, Abort>;

// Nullopt unless N(v) induces a disjoint union of cliques.
std::optional<CliqueDecomposition> clique_neighborhood(const SimpleGraph& c, int v);

// Number of pairs (x, y), x in clique i and y in clique j, admitting a
// 4-cycle center-x-delta-y with delta outside the closed neighborhood of the
// center.
long long spanning_square_count(const SimpleGraph& c, const CliqueDecomposition& dec, int i,
                                int j);

ReconstructionResult reconstruct_base(const SimpleGraph& c, const Budget& budget = Budget{});

// Membership in A. Throws std::invalid_argument if the reconstruction aborted.
bool is_abstract_link_vertex(const ReconstructionResult& result, int v);

std::string reconstruction_to_json(const ReconstructionResult& result, bool explain = false);

} // namespace recolor
