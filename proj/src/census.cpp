#include "recolor/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "recolor/coloring_graph.hpp"
#include "recolor/families.hpp"
#include "recolor/iso.hpp"
#include "recolor/labeled_link_graph.hpp"
#include "recolor/link_detect.hpp"
#include "recolor/partition_extract.hpp"

namespace recolor {

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string num(long long v) { return std::to_string(v); }

void add(SuiteReport& r, std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

long long falling(int k, int x) {
    long long p = 1;
    for (int i = 0; i < x; i++) p *= k - i;
    return p;
}

void normalize_parts(std::vector<std::vector<int>>& parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
}

// 3-colorings of the floor path u_1..u_{n+1}, consecutive vertices colored
// differently, color ((i-1) mod 3)+1 banned at u_i. Counted by a direct
// transfer along the path, independent of the coloring-graph machinery.
long long floor_path_count(int n) {
    auto banned = [](int i) { return (i - 1) % 3; };
    std::array<long long, 3> dp{};
    for (int c = 0; c < 3; c++) dp[static_cast<size_t>(c)] = c == banned(1) ? 0 : 1;
    for (int i = 2; i <= n + 1; i++) {
        std::array<long long, 3> nd{};
        for (int c = 0; c < 3; c++) {
            if (c == banned(i)) continue;
            for (int p = 0; p < 3; p++)
                if (p != c) nd[static_cast<size_t>(c)] += dp[static_cast<size_t>(p)];
        }
        dp = nd;
    }
    return dp[0] + dp[1] + dp[2];
}

SimpleGraph repeat_union(const SimpleGraph& g, int copies) {
    SimpleGraph acc = g;
    for (int i = 1; i < copies; i++) acc = disjoint_union(acc, g);
    return acc;
}

} // namespace

std::vector<SimpleGraph> all_graphs(int n, const Budget& budget) {
    if (n < 1) throw std::invalid_argument("all_graphs: n must be at least 1");
    std::vector<SimpleGraph> level{SimpleGraph(1, {})};
    for (int sz = 2; sz <= n; sz++) {
        std::map<std::string, SimpleGraph> next;
        for (const SimpleGraph& g : level)
            for (uint32_t mask = 0; mask < (1u << g.n); mask++) {
                std::vector<std::pair<int, int>> es = g.edges;
                for (int v = 0; v < g.n; v++)
                    if (mask >> v & 1) es.push_back({v, g.n});
                SimpleGraph h(g.n + 1, std::move(es));
                std::string cert = canonical_certificate(h, budget);
                next.emplace(std::move(cert), std::move(h));
            }
        level.clear();
        level.reserve(next.size());
        for (auto& [cert, g] : next) level.push_back(std::move(g));
    }
    return level;
}

bool has_induced_c5(const SimpleGraph& g) {
    auto test = [&](int u, int v) { return g.row(u)[v >> 6] >> (v & 63) & 1; };
    // a is the smallest vertex of the cycle and b < e fixes the direction, so
    // each induced 5-cycle a-b-c-d-e-a is visited at most once
    for (int a = 0; a < g.n; a++)
        for (int b : g.adj[a]) {
            if (b < a) continue;
            for (int c : g.adj[b]) {
                if (c <= a || test(a, c)) continue;
                for (int d : g.adj[c]) {
                    if (d <= a || d == b || test(a, d) || test(b, d)) continue;
                    for (int e : g.adj[d]) {
                        if (e <= b || e == c) continue;
                        if (test(a, e) && !test(b, e) && !test(c, e)) return true;
                    }
                }
            }
        }
    return false;
}

SuiteReport verify_townhouse(int n_max, const Budget& budget) {
    if (n_max < 1) throw std::invalid_argument("verify_townhouse: n_max must be at least 1");
    SuiteReport r{"townhouse", {}, {}};
    long long prev_t = 0;
    for (int n = 1; n <= n_max; n++) {
        std::string tag = "TH" + num(n);
        SimpleGraph th = townhouse(n);
        bool shape = th.n == 3 * n + 2 && th.edge_count() == 6 * n &&
                     connected_components(th).size() == 1 && chromatic_number(th) == 3;
        add(r, tag + "/shape", shape,
            num(th.n) + " vertices, " + num(th.edge_count()) + " edges, chromatic number 3");

        long long tn = floor_path_count(n);
        bool rec_ok = tn == n + 2 && (n == 1 ? tn == 3 : tn == prev_t + 1);
        prev_t = tn;
        LabeledColoringGraph lcg = build_coloring_graph(th, 3, budget);
        long long want = 6LL * (n + 2);
        add(r, tag + "/count", rec_ok && lcg.skeleton.n == want && 6 * tn == want,
            num(lcg.skeleton.n) + " colorings; floor-path count " + num(tn) +
                " follows t_1=3, t_n=t_{n-1}+1");

        SimpleGraph six = repeat_union(named_graph("P" + num(n + 2)), 6);
        bool iso = canonical_certificate(lcg.skeleton, budget) ==
                   canonical_certificate(six, budget);
        add(r, tag + "/paths", iso,
            "skeleton certificate matches 6 disjoint copies of P_" + num(n + 2));
    }
    for (int n = 1; n <= std::min(n_max, 3); n++) {
        SimpleGraph bt = basement_townhouse(n);
        LabeledColoringGraph lcg = build_coloring_graph(bt, 3, budget);
        add(r, "BTH" + num(n) + "/edgeless",
            lcg.skeleton.n == 6 * (n + 2) && lcg.skeleton.edge_count() == 0,
            num(lcg.skeleton.n) + " colorings, " + num(lcg.skeleton.edge_count()) + " edges");
    }
    return r;
}

SuiteReport verify_chi_collisions(const Budget& budget) {
    SuiteReport r{"collisions", {}, {}};
    auto cg = [&](const SimpleGraph& g, int k) { return build_coloring_graph(g, k, budget).skeleton; };
    auto cert = [&](const SimpleGraph& g) { return canonical_certificate(g, budget); };
    auto edgeless = [](const SimpleGraph& g, int n) { return g.n == n && g.edge_count() == 0; };

    {
        SimpleGraph a = cg(named_graph("K3"), 3);
        SimpleGraph b = cg(named_graph("diamond"), 3);
        add(r, "K3-vs-diamond", edgeless(a, 6) && edgeless(b, 6) && cert(a) == cert(b),
            "both chromatic-level coloring graphs are N_6");
    }
    {
        // the 12-coloring witness: the paw's triangle is rigid and only the
        // pendant swings, so its coloring graph is a perfect matching
        SimpleGraph a = cg(named_graph("paw"), 3);
        bool count = a.n == 12 && a.edge_count() == 6;
        bool match = cert(a) == cert(repeat_union(named_graph("K2"), 6));
        add(r, "paw-matching", count && match,
            num(a.n) + " colorings (6r with r=2), skeleton is 6 disjoint edges");
    }
    {
        SimpleGraph a = cg(named_graph("F2"), 3);
        add(r, "friendship-F2", edgeless(a, 12), "12 colorings, no moves");
    }
    {
        SimpleGraph a = cg(basement_townhouse(2), 3);
        SimpleGraph b = cg(named_graph("K4"), 4);
        add(r, "basement2-vs-K4",
            edgeless(a, 24) && edgeless(b, 24) && cert(a) == cert(b),
            "chromatic numbers 3 and 4, both coloring graphs are N_24");
    }
    {
        SimpleGraph g1 = repeat_union(named_graph("K3"), 2);
        SimpleGraph g2 = basement_townhouse(4);
        SimpleGraph a = cg(g1, 3);
        SimpleGraph b = cg(g2, 3);
        add(r, "disconnected-vs-connected",
            connected_components(g1).size() == 2 && connected_components(g2).size() == 1 &&
                edgeless(a, 36) && edgeless(b, 36) && cert(a) == cert(b),
            "K3+K3 against basement townhouse 4, both coloring graphs are N_36");
    }
    {
        SimpleGraph g1 = repeat_union(named_graph("F2"), 2);
        SimpleGraph g2 = cone(basement_townhouse(4));
        SimpleGraph a = cg(g1, 3);
        SimpleGraph b = cg(g2, 4);
        add(r, "disconnected-vs-connected-chi",
            chromatic_number(g1) == 3 && chromatic_number(g2) == 4 &&
                connected_components(g1).size() == 2 &&
                connected_components(g2).size() == 1 && edgeless(a, 144) &&
                edgeless(b, 144) && cert(a) == cert(b),
            "F2+F2 at its chromatic number 3 against a cone at 4, both N_144");
    }
    {
        SimpleGraph g = cone(cone(basement_townhouse(1)));
        SimpleGraph a = cg(g, 5);
        add(r, "cone-tower", chromatic_number(g) == 5 && edgeless(a, 360),
            "two stacked cones lift N_18 at 3 colors to N_360 at 5");
    }
    return r;
}

SuiteReport verify_c3c5_unique(int n_max, const Budget& budget) {
    if (n_max < 1 || n_max > 7)
        throw std::invalid_argument("verify_c3c5_unique: n_max must be in 1..7");
    SuiteReport r{"c3c5", {}, {}};

    SimpleGraph c5 = named_graph("C5");
    SimpleGraph target = build_coloring_graph(c5, 3, budget).skeleton;
    auto comps = connected_components(target);
    bool shape = target.n == 30 && comps.size() == 2;
    std::string c15 = canonical_certificate(named_graph("C15"), budget);
    for (const auto& comp : comps)
        shape = shape &&
                canonical_certificate(induced_subgraph(target, comp), budget) == c15;
    add(r, "target/shape", shape, "30 vertices in 2 components, each a 15-cycle");

    std::string target_cert = canonical_certificate(target, budget);
    std::string c5_cert = canonical_certificate(c5, budget);
    static const long long known[8] = {0, 1, 2, 4, 11, 34, 156, 1044};
    long long matches = 0;
    bool only_c5 = true;
    for (int n = 1; n <= n_max; n++) {
        std::vector<SimpleGraph> gs = all_graphs(n, budget);
        add(r, "enumeration/n" + num(n), static_cast<long long>(gs.size()) == known[n],
            num(static_cast<long long>(gs.size())) + " isomorphism classes");
        for (const SimpleGraph& g : gs) {
            std::string g6 = graph_to_graph6(g);
            try {
                int chi = chromatic_number(g);
                SimpleGraph ck = build_coloring_graph(g, chi, budget).skeleton;
                if (ck.n != 30) continue; // cheap screen before certificates
                if (canonical_certificate(ck, budget) == target_cert) {
                    matches++;
                    if (chi != 3 || canonical_certificate(g, budget) != c5_cert)
                        only_c5 = false;
                }
            } catch (const BudgetError& e) {
                r.excluded.push_back(g6 + ": " + e.what());
            }
        }
    }
    add(r, "uniqueness/match-count", matches == (n_max >= 5 ? 1 : 0),
        num(matches) + " chromatic-level coloring graphs share the target certificate");
    add(r, "uniqueness/only-c5", only_c5,
        "every match is the 5-cycle at chromatic number 3");
    return r;
}

namespace {

struct ItemResult {
    std::vector<SuiteCheck> checks;
    std::vector<std::string> excluded;
};

// Map each clique in alpha's neighborhood to the base vertex it recolors:
// every clique member must differ from alpha's coloring at one shared vertex,
// and distinct cliques must hit distinct vertices.
std::optional<std::vector<int>> cliques_to_base(const std::vector<std::vector<int>>& cliques,
                                                const Coloring& ca,
                                                const std::vector<const Coloring*>& col,
                                                int base_n) {
    if (static_cast<int>(cliques.size()) != base_n) return std::nullopt;
    std::vector<int> bvert(cliques.size(), -1);
    std::vector<char> used(static_cast<size_t>(base_n), 0);
    for (size_t q = 0; q < cliques.size(); q++) {
        for (int w : cliques[q]) {
            const Coloring& cw = *col[static_cast<size_t>(w)];
            int diff = -1, cnt = 0;
            for (int bv = 0; bv < base_n; bv++)
                if (cw.values[static_cast<size_t>(bv)] != ca.values[static_cast<size_t>(bv)]) {
                    diff = bv;
                    cnt++;
                }
            if (cnt != 1 || (bvert[q] >= 0 && bvert[q] != diff)) return std::nullopt;
            bvert[q] = diff;
        }
        if (bvert[q] < 0 || used[static_cast<size_t>(bvert[q])]) return std::nullopt;
        used[static_cast<size_t>(bvert[q])] = 1;
    }
    return bvert;
}

ItemResult run_roundtrip_item(const CatalogEntry& e, uint64_t seed, const Budget& budget) {
    ItemResult out;
    std::string tag = e.name + ".k" + num(e.k) + ".s" + num(seed);
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.checks.push_back({tag + "/" + name, pass, detail});
    };

    LabeledColoringGraph lcg = build_coloring_graph(e.base, e.k, budget);
    SimpleGraph c = strip_labels(lcg, seed);
    std::vector<int> perm = strip_permutation(lcg.skeleton.n, seed);
    std::vector<const Coloring*> col(perm.size()); // stripped id -> coloring
    for (size_t i = 0; i < perm.size(); i++)
        col[static_cast<size_t>(perm[i])] = &lcg.phi[i];

    ReconstructionResult res = reconstruct_base(c, budget);
    if (const auto* a = std::get_if<Abort>(&res)) {
        add("reconstruct", false,
            std::string("aborted at ") + abort_stage_name(a->stage) + ": " + a->detail);
        return out;
    }
    const LinkReport& rep = std::get<LinkReport>(res);
    add("reconstruct", true,
        "|A|=" + num(static_cast<long long>(rep.A.size())) + ", n=" + num(rep.n) +
            ", m=" + num(rep.m) + ", f=" + num(rep.f) + ", k=" + num(rep.k));

    add("base", rep.k == e.k &&
                    canonical_certificate(rep.base, budget) ==
                        canonical_certificate(e.base, budget),
        "recovered base on " + num(rep.base.n) + " vertices with k=" + num(rep.k));

    std::vector<int> expect_A;
    for (int v = 0; v < c.n; v++)
        if (is_link_coloring(e.base, *col[static_cast<size_t>(v)])) expect_A.push_back(v);
    add("link-set", expect_A == rep.A,
        num(static_cast<long long>(rep.A.size())) +
            " abstract link vertices equal the brute-force link colorings");

    auto base_comps = connected_components(e.base);
    std::vector<int> comp_of(static_cast<size_t>(e.base.n), -1);
    for (size_t ci = 0; ci < base_comps.size(); ci++)
        for (int v : base_comps[ci]) comp_of[static_cast<size_t>(v)] = static_cast<int>(ci);

    // Algorithm replay at every surviving vertex: the recovered partition and
    // its class moves must match what the hidden colorings dictate.
    long long part_bad = 0, anti_bad = 0, alphas = 0;
    for (int alpha : rep.A) {
        alphas++;
        const VertexAnalysis& va = rep.per_alpha.at(alpha);
        const Coloring& ca = *col[static_cast<size_t>(alpha)];
        auto bv = cliques_to_base(va.dec.cliques, ca, col, e.base.n);
        if (!bv) {
            part_bad++;
            continue;
        }
        PartitionExtraction pe = extract_partition(c, rep, alpha, budget);
        for (const ComponentPartition& cp : pe.components) {
            int bcomp = comp_of[static_cast<size_t>((*bv)[static_cast<size_t>(cp.cliques[0])])];
            bool same_comp = true;
            std::map<uint8_t, std::vector<int>> by_color;
            for (int q : cp.cliques) {
                int b = (*bv)[static_cast<size_t>(q)];
                same_comp = same_comp && comp_of[static_cast<size_t>(b)] == bcomp;
                by_color[ca.values[static_cast<size_t>(b)]].push_back(q);
            }
            std::vector<std::vector<int>> expect;
            for (auto& [color, qs] : by_color) expect.push_back(qs);
            normalize_parts(expect);
            std::vector<std::vector<int>> got = cp.parts;
            normalize_parts(got);
            if (!same_comp || got != expect) part_bad++;

            // antipodes: selection s moves a whole part to one shared color,
            // fresh for the component, and touches nothing else
            int nsel = cp.part_antipodes.empty()
                           ? 0
                           : static_cast<int>(cp.part_antipodes[0].size());
            if (nsel != e.k - static_cast<int>(cp.parts.size())) anti_bad++;
            std::vector<int> sel_color(static_cast<size_t>(nsel), -1);
            for (size_t p = 0; p < cp.parts.size(); p++)
                for (int s = 0; s < nsel; s++) {
                    const Coloring& ct =
                        *col[static_cast<size_t>(cp.part_antipodes[p][static_cast<size_t>(s)])];
                    std::vector<char> inpart(static_cast<size_t>(e.base.n), 0);
                    for (int q : cp.parts[p]) inpart[static_cast<size_t>((*bv)[static_cast<size_t>(q)])] = 1;
                    int tcol = -1;
                    bool good = true;
                    for (int b = 0; b < e.base.n; b++) {
                        uint8_t was = ca.values[static_cast<size_t>(b)];
                        uint8_t now = ct.values[static_cast<size_t>(b)];
                        if (inpart[static_cast<size_t>(b)]) {
                            if (tcol < 0) tcol = now;
                            good = good && now == tcol && now != was;
                        } else {
                            good = good && now == was;
                        }
                    }
                    for (int b : base_comps[static_cast<size_t>(bcomp)])
                        good = good && ca.values[static_cast<size_t>(b)] != tcol;
                    if (sel_color[static_cast<size_t>(s)] < 0)
                        sel_color[static_cast<size_t>(s)] = tcol;
                    good = good && sel_color[static_cast<size_t>(s)] == tcol;
                    if (!good) anti_bad++;
                }
            std::set<int> distinct(sel_color.begin(), sel_color.end());
            if (static_cast<int>(distinct.size()) != nsel) anti_bad++;
        }
    }
    add("partitions", part_bad == 0,
        num(alphas) + " vertices re-partitioned, " + num(part_bad) + " disagreements");
    add("antipodes", anti_bad == 0,
        "class moves at every vertex recolor one whole color class to a fresh color");

    // the labeled link graph at the smallest surviving vertex
    int anchor = rep.A.front();
    LabeledLinkGraph llg = build_link_graph(c, rep, anchor, budget);
    const Coloring& ca = *col[static_cast<size_t>(anchor)];

    auto same_partition = [&](const Coloring& cx) {
        for (const auto& comp : base_comps)
            for (size_t i = 0; i < comp.size(); i++)
                for (size_t j = i + 1; j < comp.size(); j++) {
                    size_t u = static_cast<size_t>(comp[i]), v = static_cast<size_t>(comp[j]);
                    if ((cx.values[u] == cx.values[v]) != (ca.values[u] == ca.values[v]))
                        return false;
                }
        return true;
    };
    std::vector<int> orbit;
    for (int v = 0; v < c.n; v++)
        if (same_partition(*col[static_cast<size_t>(v)])) orbit.push_back(v);
    long long expect_size = 1;
    std::vector<int> chis;
    for (const auto& comp : base_comps) {
        chis.push_back(chromatic_number(induced_subgraph(e.base, comp)));
        expect_size *= falling(e.k, chis.back());
    }
    add("class", llg.verts == orbit &&
                     static_cast<long long>(orbit.size()) == expect_size,
        num(static_cast<long long>(llg.verts.size())) +
            " class members equal the color-permutation orbit of size " + num(expect_size));

    long long want_deg = 0;
    for (int x : chis) want_deg += static_cast<long long>(x) * (e.k - x);
    bool deg_ok = true;
    for (int v = 0; v < llg.skeleton.n; v++)
        deg_ok = deg_ok && llg.skeleton.degree(v) == want_deg;
    std::vector<int> chis_sorted = chis, llg_chi_sorted = llg.chi;
    std::sort(chis_sorted.begin(), chis_sorted.end());
    std::sort(llg_chi_sorted.begin(), llg_chi_sorted.end());
    SimpleGraph cliques_union(0, {});
    for (int x : chis_sorted) cliques_union = disjoint_union(cliques_union, named_graph("K" + num(x)));
    SimpleGraph model = build_coloring_graph(cliques_union, e.k, budget).skeleton;
    add("skeleton", deg_ok && chis_sorted == llg_chi_sorted &&
                        graph_isomorphic(llg.skeleton, model, budget).has_value(),
        "degree " + num(want_deg) +
            " throughout; isomorphic to the coloring graph of disjoint cliques");

    // canonical palette against the hidden colorings: one fixed bijection per
    // component must translate every stored part color
    bool tau_ok = true;
    std::map<int, size_t> local;
    for (size_t i = 0; i < llg.verts.size(); i++) local[llg.verts[i]] = i;
    auto bva = cliques_to_base(rep.per_alpha.at(anchor).dec.cliques, ca, col, e.base.n);
    tau_ok = bva.has_value();
    for (size_t ci = 0; tau_ok && ci < llg.partition.components.size(); ci++) {
        const ComponentPartition& cp = llg.partition.components[ci];
        int nfree = llg.f[ci];
        std::vector<int> tau(static_cast<size_t>(e.k) + 1, -1);
        for (size_t j = 0; j < cp.parts.size(); j++)
            tau[static_cast<size_t>(nfree) + j + 1] =
                ca.values[static_cast<size_t>((*bva)[static_cast<size_t>(cp.parts[j][0])])];
        for (int s = 0; s < nfree; s++) {
            const Coloring& ct =
                *col[static_cast<size_t>(cp.part_antipodes[0][static_cast<size_t>(s)])];
            tau[static_cast<size_t>(s) + 1] =
                ct.values[static_cast<size_t>((*bva)[static_cast<size_t>(cp.parts[0][0])])];
        }
        std::set<int> seen(tau.begin() + 1, tau.end());
        tau_ok = tau_ok && static_cast<int>(seen.size()) == e.k && !seen.count(-1);
        for (size_t li = 0; tau_ok && li < llg.verts.size(); li++) {
            const Coloring& cv = *col[static_cast<size_t>(llg.verts[li])];
            for (size_t j = 0; j < cp.parts.size(); j++) {
                int want = tau[static_cast<size_t>(llg.part_colors[li][ci][j])];
                for (int q : cp.parts[j])
                    tau_ok = tau_ok &&
                             cv.values[static_cast<size_t>((*bva)[static_cast<size_t>(q)])] == want;
            }
        }
    }
    add("labels", tau_ok,
        "part colors at every class vertex translate through one bijection per component");

    // rebuilding at another class vertex must change labels only by renaming
    int anchor2 = llg.verts[0] == anchor && llg.verts.size() > 1 ? llg.verts[1] : llg.verts[0];
    LabeledLinkGraph llg2 = build_link_graph(c, rep, anchor2, budget);
    bool re_ok = llg2.verts == llg.verts;
    std::map<std::pair<int, int>, LinkEdgeLabel> lab1, lab2;
    for (size_t ei = 0; ei < llg.skeleton.edges.size(); ei++) {
        auto [lu, lv] = llg.skeleton.edges[ei];
        lab1[{llg.verts[static_cast<size_t>(lu)], llg.verts[static_cast<size_t>(lv)]}] =
            llg.edge_labels[ei];
    }
    for (size_t ei = 0; ei < llg2.skeleton.edges.size(); ei++) {
        auto [lu, lv] = llg2.skeleton.edges[ei];
        lab2[{llg2.verts[static_cast<size_t>(lu)], llg2.verts[static_cast<size_t>(lv)]}] =
            llg2.edge_labels[ei];
    }
    re_ok = re_ok && lab1.size() == lab2.size();
    std::map<int, int> cmap;
    std::map<std::pair<int, int>, int> pmap, tmap;
    auto bind = [](auto& m, auto key, int val) {
        return m.emplace(key, val).first->second == val;
    };
    if (re_ok)
        for (const auto& [key, l1] : lab1) {
            auto it2 = lab2.find(key);
            if (it2 == lab2.end()) {
                re_ok = false;
                break;
            }
            const LinkEdgeLabel& l2 = it2->second;
            re_ok = re_ok && bind(cmap, l1.comp, l2.comp) &&
                    bind(pmap, std::pair{l1.comp, l1.part}, l2.part) &&
                    bind(tmap, std::pair{l1.comp, l1.color_u}, l2.color_u) &&
                    bind(tmap, std::pair{l1.comp, l1.color_v}, l2.color_v);
        }
    // the renamings must also be injective
    {
        std::set<int> cvals;
        for (auto& [k2, v] : cmap) re_ok = re_ok && cvals.insert(v).second;
        std::set<std::pair<int, int>> pvals, tvals;
        for (auto& [k2, v] : pmap) re_ok = re_ok && pvals.insert({k2.first, v}).second;
        for (auto& [k2, v] : tmap) re_ok = re_ok && tvals.insert({k2.first, v}).second;
    }
    add("reanchor", re_ok,
        "link graph rebuilt at vertex " + num(anchor2) + " is label-isomorphic");

    add("class-walk", equivalence_class(c, rep, anchor, budget) == llg.verts,
        "plain class walk agrees with the labeled construction");
    return out;
}

} // namespace

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({"P2", named_graph("P2"), 3});
    cat.push_back({"P3", named_graph("P3"), 3});
    cat.push_back({"P3", named_graph("P3"), 4});
    cat.push_back({"C5", named_graph("C5"), 4});
    cat.push_back({"C5", named_graph("C5"), 5});
    cat.push_back({"paw", named_graph("paw"), 4});
    cat.push_back({"K3", named_graph("K3"), 4});
    cat.push_back({"N2", named_graph("N2"), 2});
    cat.push_back({"K2+K3", disjoint_union(named_graph("K2"), named_graph("K3")), 4});
    cat.push_back({"TH1", townhouse(1), 4});
    return cat;
}

SuiteReport verify_roundtrip(const std::vector<CatalogEntry>& catalog, int jobs,
                             const Budget& budget) {
    SuiteReport r{"roundtrip", {}, {}};
    struct Item {
        const CatalogEntry* e;
        uint64_t seed;
    };
    std::vector<Item> items;
    for (const auto& e : catalog)
        for (uint64_t seed : {1, 2, 3}) items.push_back({&e, seed});

    std::vector<ItemResult> results(items.size());
    auto run_one = [&](size_t i) {
        const Item& it = items[i];
        std::string tag = it.e->name + ".k" + num(it.e->k) + ".s" + num(static_cast<long long>(it.seed));
        try {
            results[i] = run_roundtrip_item(*it.e, it.seed, budget);
        } catch (const BudgetError& ex) {
            results[i].excluded.push_back(tag + ": " + ex.what());
        } catch (const std::exception& ex) {
            results[i].checks.push_back({tag + "/error", false, ex.what()});
        }
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); i++) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int workers = std::min<int>(jobs, static_cast<int>(items.size()));
        for (int t = 0; t < workers; t++)
            pool.emplace_back([&] {
                for (size_t i = next++; i < items.size(); i = next++) run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    for (ItemResult& ir : results) {
        for (auto& chk : ir.checks) r.checks.push_back(std::move(chk));
        for (auto& ex : ir.excluded) r.excluded.push_back(std::move(ex));
    }
    return r;
}

SuiteReport verify_no_surplus_chi_collision(int n_max, int k_extra, const Budget& budget) {
    if (n_max < 1 || n_max > 5)
        throw std::invalid_argument("verify_no_surplus_chi_collision: n_max must be in 1..5");
    if (k_extra < 1 || k_extra > 2)
        throw std::invalid_argument("verify_no_surplus_chi_collision: k_extra must be 1 or 2");
    SuiteReport r{"no-collision", {}, {}};

    struct Entry {
        std::string label;
        SimpleGraph graph;
    };
    std::vector<Entry> chi_side, surplus_side;
    long long aborts = 0;
    std::vector<std::string> succeeded;
    for (int n = 1; n <= n_max; n++)
        for (const SimpleGraph& g : all_graphs(n, budget)) {
            std::string g6 = graph_to_graph6(g);
            int chi = chromatic_number(g);
            try {
                SimpleGraph ck = build_coloring_graph(g, chi, budget).skeleton;
                ReconstructionResult res = reconstruct_base(ck, budget);
                if (std::holds_alternative<Abort>(res))
                    aborts++;
                else
                    succeeded.push_back(g6);
                chi_side.push_back({g6 + "@" + num(chi), std::move(ck)});
            } catch (const BudgetError& ex) {
                r.excluded.push_back(g6 + "@" + num(chi) + ": " + ex.what());
            }
            for (int k = chi + 1; k <= chi + k_extra; k++) {
                try {
                    surplus_side.push_back(
                        {g6 + "@" + num(k), build_coloring_graph(g, k, budget).skeleton});
                } catch (const BudgetError& ex) {
                    r.excluded.push_back(g6 + "@" + num(k) + ": " + ex.what());
                }
            }
        }
    // the 5-cycle's chromatic-level graph is the classic collision candidate
    // (two 15-cycles); keep it in the pool even when n_max stops short of 5
    if (n_max < 5)
        chi_side.push_back({"C5@3", build_coloring_graph(named_graph("C5"), 3, budget).skeleton});

    add(r, "chi-level/reconstruct-aborts", succeeded.empty(),
        num(aborts) + " chromatic-level coloring graphs all abort; " +
            num(static_cast<long long>(succeeded.size())) + " unexpectedly succeeded");

    // certificates are only computed where a cheap invariant collides
    auto key_of = [](const SimpleGraph& g) {
        std::vector<int> degs(static_cast<size_t>(g.n));
        for (int v = 0; v < g.n; v++) degs[static_cast<size_t>(v)] = g.degree(v);
        std::sort(degs.begin(), degs.end());
        return std::pair{std::pair{g.n, g.edge_count()}, degs};
    };
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, std::pair<std::vector<int>, std::vector<int>>>
        buckets;
    for (size_t i = 0; i < chi_side.size(); i++)
        buckets[key_of(chi_side[i].graph)].first.push_back(static_cast<int>(i));
    for (size_t i = 0; i < surplus_side.size(); i++)
        buckets[key_of(surplus_side[i].graph)].second.push_back(static_cast<int>(i));

    long long compared = 0;
    std::vector<std::string> collisions;
    for (const auto& [key, bucket] : buckets) {
        if (bucket.first.empty() || bucket.second.empty()) continue;
        std::map<std::string, std::vector<std::string>> chi_certs;
        for (int i : bucket.first) {
            try {
                chi_certs[canonical_certificate(chi_side[static_cast<size_t>(i)].graph, budget)]
                    .push_back(chi_side[static_cast<size_t>(i)].label);
            } catch (const BudgetError& ex) {
                r.excluded.push_back(chi_side[static_cast<size_t>(i)].label + ": " + ex.what());
            }
        }
        for (int i : bucket.second) {
            compared++;
            try {
                auto it = chi_certs.find(
                    canonical_certificate(surplus_side[static_cast<size_t>(i)].graph, budget));
                if (it != chi_certs.end())
                    collisions.push_back(surplus_side[static_cast<size_t>(i)].label + " ~ " +
                                         it->second.front());
            } catch (const BudgetError& ex) {
                r.excluded.push_back(surplus_side[static_cast<size_t>(i)].label + ": " +
                                     ex.what());
            }
        }
    }
    std::string coll_list;
    for (const auto& s : collisions) coll_list += (coll_list.empty() ? "" : ", ") + s;
    add(r, "certificates/disjoint", collisions.empty(),
        num(static_cast<long long>(chi_side.size())) + " chromatic-level vs " +
            num(static_cast<long long>(surplus_side.size())) + " surplus coloring graphs, " +
            num(compared) + " certificate comparisons after invariant screening" +
            (collisions.empty() ? "" : "; collisions: " + coll_list));
    return r;
}

std::string suite_report_to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["kind"] = "census_report";
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["excluded"] = r.excluded;
    return j.dump();
}

} // namespace recolor
