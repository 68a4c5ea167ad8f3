#include "recolor/link_detect.hpp"

#include <algorithm>

#include "json.hpp"

#include "recolor/coloring_graph.hpp"
#include "recolor/iso.hpp"

namespace recolor {

std::optional<CliqueDecomposition> clique_neighborhood(const SimpleGraph& c, int v) {
    SimpleGraph nb = induced_subgraph(c, c.adj[v]);
    // induced_subgraph sorts, and adj[v] is already sorted: index i <-> adj[v][i]
    CliqueDecomposition dec;
    dec.center = v;
    for (const auto& comp : connected_components(nb)) {
        for (size_t i = 0; i < comp.size(); i++)
            for (size_t j = i + 1; j < comp.size(); j++)
                if (!nb.has_edge(comp[i], comp[j])) return std::nullopt;
        std::vector<int> clique;
        clique.reserve(comp.size());
        for (int local : comp) clique.push_back(c.adj[v][local]);
        dec.cliques.push_back(std::move(clique));
    }
    // components are ordered by minimum local id == minimum neighbor id
    return dec;
}

namespace {

// Is there a 4-cycle center-x-delta-y with delta outside N[center]?
bool pair_has_square(const SimpleGraph& c, int center, int x, int y) {
    int words = c.words_per_row();
    const uint64_t* rx = c.row(x);
    const uint64_t* ry = c.row(y);
    const uint64_t* rc = c.row(center);
    for (int w = 0; w < words; w++) {
        uint64_t common = rx[w] & ry[w] & ~rc[w];
        if (w == center / 64) common &= ~(1ull << (center % 64));
        if (common) return true;
    }
    return false;
}

struct SelectionEnumerator {
    const SimpleGraph& c;
    int center;
    const std::vector<std::vector<int>>& cliques;
    const std::vector<int>& comp; // clique indices of one matrix component
    const std::vector<uint8_t>& matrix;
    int n;
    long long* steps;
    long long cap;
    std::vector<int> chosen;
    std::vector<std::vector<int>> out;

    void rec(size_t pos) {
        if (++*steps > cap) throw BudgetError("selection enumeration budget exceeded");
        if (pos == comp.size()) {
            out.push_back(chosen);
            return;
        }
        int cj = comp[pos];
        for (int y : cliques[cj]) {
            bool ok = true;
            for (size_t prev = 0; prev < pos; prev++) {
                int ci = comp[prev];
                if (matrix[static_cast<size_t>(ci) * n + cj] &&
                    pair_has_square(c, center, chosen[prev], y)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(y);
                rec(pos + 1);
                chosen.pop_back();
            }
        }
    }
};

VertexAnalysis analyze_matrix(const SimpleGraph& c, CliqueDecomposition dec,
                              long long* selection_steps, long long cap) {
    VertexAnalysis va;
    int n = static_cast<int>(dec.cliques.size());
    va.t.reserve(n);
    for (const auto& q : dec.cliques) va.t.push_back(static_cast<int>(q.size()));

    va.matrix.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            long long sq = spanning_square_count(c, dec, i, j);
            if (sq < static_cast<long long>(va.t[i]) * va.t[j]) {
                va.matrix[static_cast<size_t>(i) * n + j] = 1;
                va.matrix[static_cast<size_t>(j) * n + i] = 1;
                va.missing_pairs++;
            }
        }

    {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (va.matrix[static_cast<size_t>(i) * n + j]) es.emplace_back(i, j);
        va.components = connected_components(SimpleGraph(n, std::move(es)));
    }

    for (const auto& comp : va.components) {
        SelectionEnumerator en{c,         dec.center, dec.cliques, comp,
                               va.matrix, n,          selection_steps, cap,
                               {},        {}};
        en.rec(0);
        va.selections.push_back(std::move(en.out));
    }
    va.dec = std::move(dec);
    return va;
}

} // namespace

long long spanning_square_count(const SimpleGraph& c, const CliqueDecomposition& dec, int i,
                                int j) {
    long long count = 0;
    for (int x : dec.cliques[i])
        for (int y : dec.cliques[j])
            if (pair_has_square(c, dec.center, x, y)) count++;
    return count;
}

const char* abort_stage_name(Abort::Stage s) {
    switch (s) {
        case Abort::Stage::no_candidates: return "no-candidates";
        case Abort::Stage::non_integral_k: return "non-integral-k";
        case Abort::Stage::iso_check_failed: return "iso-check-failed";
    }
    return "?";
}

ReconstructionResult reconstruct_base(const SimpleGraph& c, const Budget& budget) {
    Abort ab{Abort::Stage::no_candidates, "", std::nullopt, 0, 0, 0, 0, 0};

    // candidates with clique-decomposable neighborhoods
    std::vector<std::pair<int, CliqueDecomposition>> cands;
    for (int v = 0; v < c.n; v++)
        if (auto dec = clique_neighborhood(c, v)) cands.emplace_back(v, std::move(*dec));
    ab.count_step_cliques = static_cast<int>(cands.size());
    if (cands.empty()) {
        ab.detail = "no vertex neighborhood is a disjoint union of cliques";
        return ab;
    }

    // keep the maximum clique count
    int n = 0;
    for (const auto& [v, dec] : cands) n = std::max(n, static_cast<int>(dec.cliques.size()));
    if (n == 0) {
        ab.detail = "the graph has no edges to recolor across";
        return ab;
    }
    std::erase_if(cands, [&](const auto& p) {
        return static_cast<int>(p.second.cliques.size()) != n;
    });
    ab.count_step_max_cliques = static_cast<int>(cands.size());

    // full per-vertex structure; keep maximum missing-square pair count
    long long selection_steps = 0;
    std::vector<std::pair<int, VertexAnalysis>> analyzed;
    analyzed.reserve(cands.size());
    for (auto& [v, dec] : cands)
        analyzed.emplace_back(
            v, analyze_matrix(c, std::move(dec), &selection_steps, budget.selection_steps));
    long long m = 0;
    for (const auto& [v, va] : analyzed) m = std::max(m, va.missing_pairs);
    std::erase_if(analyzed, [&](const auto& p) { return p.second.missing_pairs != m; });
    ab.count_step_squares = static_cast<int>(analyzed.size());

    // keep the maximum selection count
    int f = 0;
    for (const auto& [v, va] : analyzed) f = std::max(f, va.selection_count());
    std::erase_if(analyzed, [&](const auto& p) { return p.second.selection_count() != f; });
    ab.count_step_selections = static_cast<int>(analyzed.size());

    // read off G and k from the survivors; the matrices of genuine link
    // vertices are permutation-equivalent, so build one candidate coloring
    // graph per distinct matrix certificate
    std::vector<std::string> seen_certs;
    std::optional<SimpleGraph> integral_base; // first candidate with a whole k
    int integral_k = 0;
    std::optional<SimpleGraph> fractional_base;
    for (const auto& [v, va] : analyzed) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (va.matrix[static_cast<size_t>(i) * n + j]) es.emplace_back(i, j);
        SimpleGraph base(n, std::move(es));
        std::string cert = canonical_certificate(base, budget);
        if (std::find(seen_certs.begin(), seen_certs.end(), cert) != seen_certs.end()) continue;
        seen_certs.push_back(cert);

        auto comps = connected_components(base);
        int d = static_cast<int>(comps.size());
        int chi_sum = 0;
        std::vector<int> chi;
        for (const auto& comp : comps) {
            chi.push_back(chromatic_number(induced_subgraph(base, comp)));
            chi_sum += chi.back();
        }
        if ((f + chi_sum) % d != 0) {
            if (!fractional_base) fractional_base = base;
            continue;
        }
        int k = (f + chi_sum) / d;
        if (k < 1) continue;
        if (!integral_base) {
            integral_base = base;
            integral_k = k;
        }

        LabeledColoringGraph candidate = build_coloring_graph(base, k, budget);
        if (graph_isomorphic(c, candidate.skeleton, budget)) {
            LinkReport rep;
            rep.n = n;
            rep.m = m;
            rep.f = f;
            rep.k = k;
            rep.base = std::move(base);
            rep.base_components = std::move(comps);
            rep.chi = std::move(chi);
            rep.distinct_matrix_certs = static_cast<int>(seen_certs.size());
            rep.count_step_cliques = ab.count_step_cliques;
            rep.count_step_max_cliques = ab.count_step_max_cliques;
            rep.count_step_squares = ab.count_step_squares;
            rep.count_step_selections = ab.count_step_selections;
            for (auto& [w, wa] : analyzed) {
                rep.A.push_back(w);
                rep.per_alpha.emplace(w, std::move(wa));
            }
            return rep;
        }
    }

    if (integral_base) {
        ab.stage = Abort::Stage::iso_check_failed;
        ab.detail = "input is not isomorphic to the coloring graph it predicts";
        ab.candidate_base = std::move(integral_base);
        ab.candidate_k = integral_k;
    } else {
        ab.stage = Abort::Stage::non_integral_k;
        ab.detail = "selection and chromatic totals do not divide evenly";
        ab.candidate_base = std::move(fractional_base);
    }
    return ab;
}

bool is_abstract_link_vertex(const ReconstructionResult& result, int v) {
    const auto* rep = std::get_if<LinkReport>(&result);
    if (!rep)
        throw std::invalid_argument("abstract link vertices are undefined after an abort");
    return std::binary_search(rep->A.begin(), rep->A.end(), v);
}

std::string reconstruction_to_json(const ReconstructionResult& result, bool explain) {
    nlohmann::json j;
    auto attach_attrition = [&](int c1, int c2, int c3, int c6) {
        j["attrition"] = {{"clique_neighborhoods", c1},
                          {"max_clique_count", c2},
                          {"max_missing_squares", c3},
                          {"max_selections", c6}};
    };
    if (const auto* rep = std::get_if<LinkReport>(&result)) {
        j["kind"] = "link_report";
        j["n"] = rep->n;
        j["m"] = rep->m;
        j["f"] = rep->f;
        j["k"] = rep->k;
        j["A"] = rep->A;
        j["G"] = nlohmann::json::parse(graph_to_json(rep->base));
        j["component_chromatic_numbers"] = rep->chi;
        j["distinct_matrix_certificates"] = rep->distinct_matrix_certs;
        if (explain)
            attach_attrition(rep->count_step_cliques, rep->count_step_max_cliques,
                             rep->count_step_squares, rep->count_step_selections);
    } else {
        const auto& abort = std::get<Abort>(result);
        j["kind"] = "abort";
        j["stage"] = abort_stage_name(abort.stage);
        j["detail"] = abort.detail;
        if (abort.candidate_base) {
            j["candidate_G"] = nlohmann::json::parse(graph_to_json(*abort.candidate_base));
            j["candidate_k"] = abort.candidate_k;
        }
        if (explain)
            attach_attrition(abort.count_step_cliques, abort.count_step_max_cliques,
                             abort.count_step_squares, abort.count_step_selections);
    }
    return j.dump();
}

} // namespace recolor
