#include "recolor/coloring_graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace recolor {

std::vector<Coloring> enumerate_colorings(const SimpleGraph& g, int k, const Budget& budget) {
    if (k < 1 || k > 255) throw std::invalid_argument("palette size must be in 1..255");
    std::vector<Coloring> out;
    std::vector<uint8_t> cur(g.n, 0);
    // assign vertices 0..n-1 in order; ascending color choice keeps the
    // output lexicographically sorted by construction
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            if (static_cast<long long>(out.size()) >= budget.max_colorings)
                throw BudgetError("coloring enumeration budget exceeded");
            out.push_back({cur, k});
            return;
        }
        for (int c = 1; c <= k; c++) {
            bool ok = true;
            for (int w : g.adj[v])
                if (w < v && cur[w] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur[v] = static_cast<uint8_t>(c);
                self(self, v + 1);
            }
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    return out;
}

LabeledColoringGraph build_coloring_graph(const SimpleGraph& g, int k, const Budget& budget) {
    LabeledColoringGraph lcg;
    lcg.base = g;
    lcg.k = k;
    lcg.phi = enumerate_colorings(g, k, budget);
    int nc = static_cast<int>(lcg.phi.size());

    struct Item {
        std::string key;
        int id;
    };
    struct EdgeRec {
        int u, v;
        ColoringEdgeLabel label;
    };
    std::vector<EdgeRec> recs;
    std::vector<Item> items(nc);
    for (int bv = 0; bv < g.n; bv++) {
        // colorings agreeing everywhere except bv form a clique
        for (int i = 0; i < nc; i++) {
            std::string key(lcg.phi[i].values.begin(), lcg.phi[i].values.end());
            key[bv] = 0;
            items[i] = {std::move(key), i};
        }
        std::sort(items.begin(), items.end(),
                  [](const Item& a, const Item& b) { return a.key < b.key; });
        size_t i = 0;
        while (i < items.size()) {
            size_t j = i;
            while (j < items.size() && items[j].key == items[i].key) j++;
            for (size_t x = i; x < j; x++)
                for (size_t y = x + 1; y < j; y++) {
                    int u = std::min(items[x].id, items[y].id);
                    int v = std::max(items[x].id, items[y].id);
                    recs.push_back({u, v,
                                    {bv, lcg.phi[u].values[bv], lcg.phi[v].values[bv]}});
                }
            i = j;
        }
    }
    std::sort(recs.begin(), recs.end(), [](const EdgeRec& a, const EdgeRec& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<std::pair<int, int>> es;
    es.reserve(recs.size());
    lcg.edge_labels.reserve(recs.size());
    for (const auto& r : recs) {
        es.emplace_back(r.u, r.v);
        lcg.edge_labels.push_back(r.label);
    }
    lcg.skeleton = SimpleGraph(nc, std::move(es));
    return lcg;
}

std::vector<int> strip_permutation(int n, uint64_t seed) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

SimpleGraph strip_labels(const LabeledColoringGraph& lcg, uint64_t seed) {
    auto perm = strip_permutation(lcg.skeleton.n, seed);
    std::vector<std::pair<int, int>> es;
    es.reserve(lcg.skeleton.edges.size());
    for (auto [u, v] : lcg.skeleton.edges) es.emplace_back(perm[u], perm[v]);
    return SimpleGraph(lcg.skeleton.n, std::move(es));
}

std::vector<uint8_t> free_colors(const SimpleGraph& g, const Coloring& c, int v) {
    if (static_cast<int>(c.values.size()) != g.n)
        throw std::invalid_argument("coloring length != vertex count");
    std::vector<char> seen(c.k + 1, 0);
    seen[c.values[v]] = 1;
    for (int w : g.adj[v]) seen[c.values[w]] = 1;
    std::vector<uint8_t> out;
    for (int col = 1; col <= c.k; col++)
        if (!seen[col]) out.push_back(static_cast<uint8_t>(col));
    return out;
}

bool is_link_coloring(const SimpleGraph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c.values))
        throw std::invalid_argument("is_link_coloring: coloring is not proper");
    if (c.k <= chromatic_number(g))
        throw SurplusViolation("is_link_coloring: palette must exceed the chromatic number");
    for (const auto& comp : connected_components(g)) {
        std::vector<char> used(c.k + 1, 0);
        int distinct = 0;
        for (int v : comp)
            if (!used[c.values[v]]) {
                used[c.values[v]] = 1;
                distinct++;
            }
        if (distinct != chromatic_number(induced_subgraph(g, comp))) return false;
    }
    return true;
}

bool is_weak_link_coloring(const SimpleGraph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c.values))
        throw std::invalid_argument("is_weak_link_coloring: coloring is not proper");
    for (auto [u, v] : g.edges) {
        auto fu = free_colors(g, c, u);
        auto fv = free_colors(g, c, v);
        std::vector<uint8_t> common;
        std::set_intersection(fu.begin(), fu.end(), fv.begin(), fv.end(),
                              std::back_inserter(common));
        if (common.empty()) return false;
    }
    return true;
}

std::optional<HypercubeWitness> hypercube_from_corner(const SimpleGraph& skeleton, int corner,
                                                      const std::vector<int>& dims) {
    int d = static_cast<int>(dims.size());
    if (d > 30) throw std::invalid_argument("hypercube dimension too large");
    {
        std::vector<int> check = dims;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw std::invalid_argument("hypercube dimensions must be distinct");
    }
    for (int x : dims)
        if (!skeleton.has_edge(corner, x))
            throw std::invalid_argument("hypercube dimension is not a neighbor of the corner");

    HypercubeWitness w;
    w.corner = corner;
    w.dims = dims;
    w.layer_map.assign(static_cast<size_t>(1) << d, -1);
    w.layer_map[0] = corner;
    for (int i = 0; i < d; i++) w.layer_map[static_cast<size_t>(1) << i] = dims[i];

    // masks in increasing popcount order
    std::vector<uint32_t> order;
    for (uint32_t m = 0; m < (1u << d); m++)
        if (__builtin_popcount(m) >= 2) order.push_back(m);
    std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (uint32_t m : order) {
        std::vector<int> preds;
        for (int i = 0; i < d; i++)
            if (m & (1u << i)) preds.push_back(w.layer_map[m ^ (1u << i)]);
        int found = -1;
        for (int cand : skeleton.adj[preds[0]]) {
            if (cand == corner) continue; // the only lower-layer common neighbor case
            bool ok = true;
            for (size_t i = 1; i < preds.size(); i++)
                if (!skeleton.has_edge(cand, preds[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (found != -1)
                throw StructuralError("hypercube completion ambiguous at corner " +
                                      std::to_string(corner));
            found = cand;
        }
        if (found == -1) return std::nullopt;
        w.layer_map[m] = found;
    }
    w.antipode = w.layer_map.back();

    // the witness must be a genuine induced cube: distinct vertices, and no
    // adjacency between masks at Hamming distance >= 2
    {
        std::vector<int> verts = w.layer_map;
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return std::nullopt;
    }
    for (size_t a = 0; a < w.layer_map.size(); a++)
        for (size_t b = a + 1; b < w.layer_map.size(); b++) {
            int dist = __builtin_popcount(static_cast<uint32_t>(a ^ b));
            bool adj = skeleton.has_edge(w.layer_map[a], w.layer_map[b]);
            if (dist >= 2 && adj) return std::nullopt;
            if (dist == 1 && !adj) return std::nullopt; // only possible for corner pairs handled above
        }
    return w;
}

std::string coloring_to_string(const Coloring& c) {
    std::string s;
    for (size_t i = 0; i < c.values.size(); i++) {
        if (c.k > 9 && i > 0) s.push_back('.');
        if (c.values[i] <= 9)
            s.push_back(static_cast<char>('0' + c.values[i]));
        else
            s += std::to_string(static_cast<int>(c.values[i]));
    }
    return s;
}

std::string lcg_to_json(const LabeledColoringGraph& lcg) {
    nlohmann::json j;
    j["kind"] = "coloring_graph";
    j["k"] = lcg.k;
    j["base"] = nlohmann::json::parse(graph_to_json(lcg.base));
    j["skeleton"] = nlohmann::json::parse(graph_to_json(lcg.skeleton));
    auto phi = nlohmann::json::array();
    for (const auto& c : lcg.phi) {
        auto vals = nlohmann::json::array();
        for (uint8_t x : c.values) vals.push_back(static_cast<int>(x));
        phi.push_back(std::move(vals));
    }
    j["phi"] = std::move(phi);
    auto labels = nlohmann::json::array();
    for (size_t i = 0; i < lcg.edge_labels.size(); i++) {
        const auto& l = lcg.edge_labels[i];
        labels.push_back({{"u", lcg.skeleton.edges[i].first},
                          {"v", lcg.skeleton.edges[i].second},
                          {"vertex", l.base_vertex},
                          {"from", static_cast<int>(l.from_color)},
                          {"to", static_cast<int>(l.to_color)}});
    }
    j["edge_labels"] = std::move(labels);
    return j.dump();
}

std::string lcg_to_dot(const LabeledColoringGraph& lcg) {
    SimpleGraph g = lcg.skeleton;
    g.names.clear();
    for (const auto& c : lcg.phi) g.names.push_back(coloring_to_string(c));
    std::vector<int> highlight;
    bool surplus = lcg.k > chromatic_number(lcg.base);
    if (surplus)
        for (int v = 0; v < g.n; v++)
            if (is_link_coloring(lcg.base, lcg.phi[v])) highlight.push_back(v);
    std::vector<std::string> elabels;
    elabels.reserve(lcg.edge_labels.size());
    for (const auto& l : lcg.edge_labels) {
        std::ostringstream os;
        os << static_cast<int>(l.from_color) << "v" << l.base_vertex
           << static_cast<int>(l.to_color);
        elabels.push_back(os.str());
    }
    return graph_to_dot(g, highlight, elabels);
}

} // namespace recolor
