#include "recolor/partition_extract.hpp"

#include <algorithm>
#include <stdexcept>

#include "recolor/coloring_graph.hpp"

#include "json.hpp"

namespace recolor {

namespace {

// One matrix component of one vertex analysis, with everything indexed
// locally: position t means clique comp[t].
struct ComponentView {
    const SimpleGraph& c;
    const LinkReport& rep;
    const VertexAnalysis& va;
    int alpha;
    const std::vector<int>& comp;                    // clique ids, ascending
    const std::vector<std::vector<int>>& selections; // aligned with comp

    bool matrix_adjacent(int qi, int qj) const {
        int n = static_cast<int>(va.t.size());
        return va.matrix[static_cast<size_t>(qi) * n + qj] != 0;
    }

    // Hypercube from alpha whose dimensions are selection `s` restricted to
    // the positions in `part`.
    std::optional<HypercubeWitness> part_cube(const std::vector<int>& part, int s) const {
        std::vector<int> dims;
        dims.reserve(part.size());
        for (int pos : part) dims.push_back(selections[s][pos]);
        return hypercube_from_corner(c, alpha, dims);
    }

    // The antipode must be a surviving vertex, and stepping back into the
    // cube must look like a fragment of one of its own selections.
    bool antipode_ok(const HypercubeWitness& w, PartitionDiagnostics& diag) const {
        if (!std::binary_search(rep.A.begin(), rep.A.end(), w.antipode)) {
            diag.pruned_antipode_absent++;
            return false;
        }
        int d = static_cast<int>(w.dims.size());
        int full = (1 << d) - 1;
        std::vector<int> back(d);
        for (int t = 0; t < d; t++) back[t] = w.layer_map[full ^ (1 << t)];
        std::sort(back.begin(), back.end());

        const VertexAnalysis& other = rep.per_alpha.at(w.antipode);
        for (const auto& comp_sels : other.selections) {
            for (const auto& sel : comp_sels) {
                std::vector<int> sorted = sel;
                std::sort(sorted.begin(), sorted.end());
                if (std::includes(sorted.begin(), sorted.end(), back.begin(), back.end()))
                    return true;
            }
        }
        diag.pruned_antipode_moves++;
        return false;
    }
};

// Restricted-growth enumeration of partitions of positions 0..sz-1 into
// exactly `parts_wanted` matrix-independent parts, with the cube and antipode
// checks applied to each complete candidate.
struct PartitionSearch {
    const ComponentView& view;
    int parts_wanted;
    const Budget& budget;
    PartitionDiagnostics& diag;

    int sz;
    std::vector<int> assign;                    // position -> part id
    std::vector<std::vector<int>> parts;        // growing candidate, part id -> positions
    std::vector<std::vector<int>> survivor;     // positions per part
    int survivors = 0;
    long long steps = 0;

    PartitionSearch(const ComponentView& v, int pw, const Budget& b, PartitionDiagnostics& d)
        : view(v), parts_wanted(pw), budget(b), diag(d),
          sz(static_cast<int>(v.comp.size())), assign(sz, -1) {}

    void run() {
        parts.assign(1, {0});
        assign[0] = 0;
        grow(1);
    }

    void grow(int pos) {
        if (++steps > budget.selection_steps)
            throw BudgetError("class partition enumeration exceeded its step budget");
        int used = static_cast<int>(parts.size());
        if (pos == sz) {
            if (used == parts_wanted) finish();
            return;
        }
        // a new part for every remaining position still cannot reach the
        // target count: prune
        if (used + (sz - pos) < parts_wanted) return;
        int limit = std::min(used, parts_wanted - 1);
        for (int p = 0; p <= limit; p++) {
            bool fresh = (p == used);
            if (!fresh) {
                bool clash = false;
                for (int q : parts[p])
                    if (view.matrix_adjacent(view.comp[q], view.comp[pos])) {
                        clash = true;
                        break;
                    }
                if (clash) {
                    diag.pruned_adjacent++;
                    continue;
                }
            } else {
                parts.emplace_back();
            }
            parts[p].push_back(pos);
            assign[pos] = p;
            grow(pos + 1);
            parts[p].pop_back();
            assign[pos] = -1;
            if (fresh) parts.pop_back();
        }
    }

    void finish() {
        diag.candidates++;
        for (const auto& part : parts) {
            auto cube = view.part_cube(part, 0);
            if (!cube) {
                diag.pruned_cube++;
                return;
            }
            if (!view.antipode_ok(*cube, diag)) return;
        }
        survivors++;
        if (survivors == 1) survivor = parts;
    }
};

} // namespace

PartitionExtraction extract_partition(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                      const Budget& budget) {
    auto it = rep.per_alpha.find(alpha);
    if (it == rep.per_alpha.end())
        throw std::invalid_argument("extract_partition: vertex " + std::to_string(alpha) +
                                    " is not a surviving vertex");
    const VertexAnalysis& va = it->second;
    int n = static_cast<int>(va.t.size());

    // chromatic number of each matrix component, computed on alpha's own
    // matrix (component order here need not match rep.base_components)
    std::vector<std::pair<int, int>> matrix_edges;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (va.matrix[static_cast<size_t>(i) * n + j]) matrix_edges.emplace_back(i, j);
    SimpleGraph matrix_graph(n, std::move(matrix_edges));

    PartitionExtraction pe;
    pe.alpha = alpha;
    for (size_t ell = 0; ell < va.components.size(); ell++) {
        const auto& comp = va.components[ell];
        int chi = chromatic_number(induced_subgraph(matrix_graph, comp));

        ComponentView view{c, rep, va, alpha, comp, va.selections[ell]};
        PartitionSearch search(view, chi, budget, pe.diagnostics);
        search.run();
        if (search.survivors != 1)
            throw StructuralError("vertex " + std::to_string(alpha) + ", component " +
                                  std::to_string(ell) + ": " + std::to_string(search.survivors) +
                                  " class partitions survive, expected exactly 1");

        ComponentPartition cp;
        cp.cliques = comp;
        for (const auto& part : search.survivor) {
            std::vector<int> ids;
            ids.reserve(part.size());
            for (int pos : part) ids.push_back(comp[pos]);
            cp.parts.push_back(std::move(ids));
        }
        // positions were assigned in ascending order, so parts are already
        // sorted internally and ordered by first member

        int sels = static_cast<int>(va.selections[ell].size());
        for (const auto& part : search.survivor) {
            std::vector<int> anti(sels, -1);
            for (int s = 0; s < sels; s++) {
                auto cube = view.part_cube(part, s);
                if (!cube)
                    throw StructuralError("vertex " + std::to_string(alpha) +
                                          ": a class move cube is missing for selection " +
                                          std::to_string(s));
                anti[s] = cube->antipode;
            }
            cp.part_antipodes.push_back(std::move(anti));
        }
        pe.components.push_back(std::move(cp));
    }
    return pe;
}

std::string partition_to_json(const PartitionExtraction& pe, bool explain) {
    nlohmann::json j;
    j["kind"] = "partition";
    j["alpha"] = pe.alpha;
    j["components"] = nlohmann::json::array();
    for (const auto& cp : pe.components) {
        nlohmann::json jc;
        jc["cliques"] = cp.cliques;
        jc["parts"] = cp.parts;
        // canonical palette: free colors come first, then one color per part
        int nfree = cp.part_antipodes.empty() ? 0
                                              : static_cast<int>(cp.part_antipodes[0].size());
        std::vector<int> cols;
        for (size_t p = 0; p < cp.parts.size(); p++)
            cols.push_back(nfree + static_cast<int>(p) + 1);
        jc["part_colors"] = cols;
        jc["antipodes"] = cp.part_antipodes;
        j["components"].push_back(std::move(jc));
    }
    if (explain) {
        const auto& d = pe.diagnostics;
        j["attrition"] = {{"candidates", d.candidates},
                          {"pruned_adjacent", d.pruned_adjacent},
                          {"pruned_cube", d.pruned_cube},
                          {"pruned_antipode_absent", d.pruned_antipode_absent},
                          {"pruned_antipode_moves", d.pruned_antipode_moves}};
    }
    return j.dump();
}

} // namespace recolor
