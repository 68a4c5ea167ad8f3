#include "recolor/labeled_link_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "recolor/partition_extract.hpp"

#include "json.hpp"

namespace recolor {

namespace {

struct ClassMove {
    int comp, part, sel; // indices local to the source vertex's own extraction
    int dim;             // part size = dimension of the crossed hypercube
    int to;              // antipode reached
};

// Every vertex the search touches needs its own partition extraction; cache
// them, flattened into class-move lists.
struct MoveOracle {
    const SimpleGraph& c;
    const LinkReport& rep;
    const Budget& budget;
    std::map<int, std::vector<ClassMove>> cache;

    const std::vector<ClassMove>& at(int x) {
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
        PartitionExtraction pe = extract_partition(c, rep, x, budget);
        std::vector<ClassMove> ms;
        std::set<int> targets;
        for (size_t ci = 0; ci < pe.components.size(); ci++) {
            const auto& cp = pe.components[ci];
            for (size_t p = 0; p < cp.parts.size(); p++)
                for (size_t s = 0; s < cp.part_antipodes[p].size(); s++) {
                    int to = cp.part_antipodes[p][s];
                    if (to == x || !targets.insert(to).second)
                        throw StructuralError("vertex " + std::to_string(x) +
                                              ": class moves are not pairwise distinct");
                    ms.push_back({static_cast<int>(ci), static_cast<int>(p),
                                  static_cast<int>(s), static_cast<int>(cp.parts[p].size()),
                                  to});
                }
        }
        return cache.emplace(x, std::move(ms)).first->second;
    }
};

const ClassMove& move_to(MoveOracle& oracle, int from, int to) {
    for (const ClassMove& mv : oracle.at(from))
        if (mv.to == to) return mv;
    throw StructuralError("no class move from " + std::to_string(from) + " to " +
                          std::to_string(to));
}

// Unique simple path beta -> x1 -> x2 -> x3 -> delta through class moves,
// never visiting gamma. beta and delta are class moves of gamma taking two
// different parts of one component to the same free color; the path closes
// the six-cycle in which those parts rotate through three colors. Alternating
// part sizes alone admit impostors once two free colors exist, so every hop
// is pinned down harder: at each vertex the arriving and departing jumps must
// move different parts of one component to one free color, which in an
// unlabeled graph means they share the vertex's own selection index.
std::array<int, 3> six_cycle_interior(MoveOracle& oracle, int beta, int delta, int gamma) {
    const ClassMove rm_beta = move_to(oracle, beta, gamma);
    const ClassMove rm_delta = move_to(oracle, delta, gamma);
    std::array<int, 2> dims{rm_delta.dim, rm_beta.dim}; // hop parity -> expected part size
    std::vector<std::array<int, 3>> found;
    std::array<int, 3> interior{};
    std::vector<int> path{beta};
    auto dfs = [&](auto&& self, int level, const ClassMove& prev) -> void {
        int cur = path.back();
        for (const ClassMove& mv : oracle.at(cur)) {
            if (mv.comp != prev.comp || mv.sel != prev.sel || mv.part == prev.part) continue;
            if (mv.dim != dims[static_cast<size_t>(level % 2)]) continue;
            if (mv.to == gamma) continue;
            if (level == 3) {
                if (mv.to != delta) continue;
                const ClassMove& arr = move_to(oracle, delta, path.back());
                if (arr.comp == rm_delta.comp && arr.sel == rm_delta.sel &&
                    arr.part != rm_delta.part)
                    found.push_back(interior);
                continue;
            }
            if (mv.to == delta) continue;
            if (std::find(path.begin(), path.end(), mv.to) != path.end()) continue;
            interior[static_cast<size_t>(level)] = mv.to;
            path.push_back(mv.to);
            self(self, level + 1, move_to(oracle, mv.to, cur));
            path.pop_back();
        }
    };
    dfs(dfs, 0, rm_beta);
    if (found.size() != 1)
        throw StructuralError("six-cycle closure between " + std::to_string(beta) + " and " +
                              std::to_string(delta) + " is not unique (" +
                              std::to_string(found.size()) + " paths)");
    return found[0];
}

using ColorState = std::vector<std::vector<int>>; // [comp][part] -> color

struct Builder {
    const SimpleGraph& c;
    const LinkReport& rep;
    int alpha;
    const Budget& budget;
    MoveOracle oracle;

    int k = 0;
    std::vector<int> chi, f;
    std::vector<std::vector<int>> part_sizes;
    PartitionExtraction partition;
    long long degree = 0; // every class vertex moves any part to any free color

    std::map<int, ColorState> colors;
    // (u, v) with u < v -> (comp, part, color at u, color at v)
    std::map<std::pair<int, int>, std::array<int, 4>> labels;
    // x -> (comp, part, color at neighbor) -> neighbor
    std::map<int, std::map<std::tuple<int, int, int>, int>> out;
    std::set<int> done;
    std::deque<int> queue;

    Builder(const SimpleGraph& c_, const LinkReport& rep_, int alpha_, const Budget& b)
        : c(c_), rep(rep_), alpha(alpha_), budget(b), oracle{c_, rep_, b, {}} {}

    void init() {
        k = rep.k;
        partition = extract_partition(c, rep, alpha, budget);
        const PartitionExtraction& pe = partition;
        ColorState at_alpha;
        for (const auto& cp : pe.components) {
            int nparts = static_cast<int>(cp.parts.size());
            int nfree = static_cast<int>(cp.part_antipodes.empty()
                                             ? 0
                                             : cp.part_antipodes[0].size());
            if (nparts + nfree != k)
                throw StructuralError("component part and free color counts do not sum to the "
                                      "palette size");
            chi.push_back(nparts);
            f.push_back(nfree);
            degree += static_cast<long long>(nparts) * nfree;
            std::vector<int> sizes, cols;
            for (int j = 0; j < nparts; j++) {
                sizes.push_back(static_cast<int>(cp.parts[j].size()));
                cols.push_back(nfree + j + 1); // part j starts at color f_i + j
            }
            part_sizes.push_back(std::move(sizes));
            at_alpha.push_back(std::move(cols));
        }
        colors.emplace(alpha, at_alpha);
        done.insert(alpha);

        // free color s is, by definition, where selection s sends things
        for (size_t i = 0; i < pe.components.size(); i++) {
            const auto& cp = pe.components[i];
            for (size_t j = 0; j < cp.parts.size(); j++)
                for (size_t s = 0; s < cp.part_antipodes[j].size(); s++) {
                    int beta = cp.part_antipodes[j][s];
                    ColorState st = at_alpha;
                    st[i][j] = static_cast<int>(s) + 1;
                    discover(beta, st);
                    register_edge(alpha, beta, static_cast<int>(i), static_cast<int>(j),
                                  at_alpha[i][j], static_cast<int>(s) + 1);
                }
        }
    }

    void discover(int v, const ColorState& st) {
        auto [it, inserted] = colors.emplace(v, st);
        if (!inserted) {
            if (it->second != st)
                throw StructuralError("vertex " + std::to_string(v) +
                                      " reached with two different part color states");
            return;
        }
        queue.push_back(v);
    }

    void register_edge(int x, int y, int comp, int part, int cx, int cy) {
        const ColorState& sx = colors.at(x);
        const ColorState& sy = colors.at(y);
        if (sx[comp][part] != cx || sy[comp][part] != cy)
            throw StructuralError("edge label colors disagree with endpoint states");
        // endpoints must differ in this one part and nowhere else
        for (size_t i = 0; i < sx.size(); i++)
            for (size_t j = 0; j < sx[i].size(); j++) {
                bool same = sx[i][j] == sy[i][j];
                bool here = static_cast<int>(i) == comp && static_cast<int>(j) == part;
                if (same == here)
                    throw StructuralError("edge endpoints do not differ in exactly the "
                                          "labeled part");
            }

        std::pair<int, int> key = x < y ? std::pair{x, y} : std::pair{y, x};
        std::array<int, 4> lab =
            x < y ? std::array{comp, part, cx, cy} : std::array{comp, part, cy, cx};
        auto [it, inserted] = labels.emplace(key, lab);
        if (!inserted && it->second != lab)
            throw StructuralError("conflicting labels on one link-graph edge");

        auto put = [&](int a, int b, int col_at_b) {
            auto [oit, fresh] = out[a].emplace(std::tuple{comp, part, col_at_b}, b);
            if (!fresh && oit->second != b)
                throw StructuralError("two moves with one meaning at vertex " +
                                      std::to_string(a));
        };
        put(x, y, cy);
        put(y, x, cx);
    }

    // gamma's already-labeled move of the given part to color `to`
    int nbr(int gamma, int comp, int part, int to) const {
        const auto& m = out.at(gamma);
        auto it = m.find(std::tuple{comp, part, to});
        if (it == m.end())
            throw StructuralError("processed vertex " + std::to_string(gamma) +
                                  " is missing an expected labeled move");
        return it->second;
    }

    std::vector<int> free_palette(const ColorState& st, int comp) const {
        std::vector<char> used(static_cast<size_t>(k) + 1, 0);
        for (int col : st[comp]) used[static_cast<size_t>(col)] = 1;
        std::vector<int> fr;
        for (int col = 1; col <= k; col++)
            if (!used[static_cast<size_t>(col)]) fr.push_back(col);
        return fr;
    }

    // Unique vertex besides gamma that is class-adjacent to both ends.
    int square_interior(int beta, int delta, int gamma) {
        std::set<int> nb;
        for (const ClassMove& mv : oracle.at(beta)) nb.insert(mv.to);
        std::vector<int> commons;
        for (const ClassMove& mv : oracle.at(delta))
            if (mv.to != gamma && nb.count(mv.to)) commons.push_back(mv.to);
        if (commons.size() != 1)
            throw StructuralError("square closure between " + std::to_string(beta) + " and " +
                                  std::to_string(delta) + " is not unique");
        return commons[0];
    }

    void process(int beta) {
        // predecessor: a processed neighbor over an already-labeled edge
        int gamma = -1, i = -1, j = -1, cj = -1;
        for (const auto& [key, y] : out.at(beta)) {
            if (!done.count(y)) continue;
            std::tie(i, j, cj) = key;
            gamma = y;
            break;
        }
        if (gamma < 0)
            throw StructuralError("queued vertex " + std::to_string(beta) +
                                  " has no processed neighbor");
        const ColorState& bcol = colors.at(beta);
        const ColorState& gcol = colors.at(gamma);
        int cc = bcol[i][j]; // part (i, j) is colored cj at gamma, cc at beta

        std::vector<std::vector<int>> fr(chi.size());
        for (size_t ell = 0; ell < chi.size(); ell++)
            fr[ell] = free_palette(gcol, static_cast<int>(ell));

        // (a) parts of the same component moving to the same free color close
        // six-cycles through beta
        for (int k2 = 0; k2 < chi[static_cast<size_t>(i)]; k2++) {
            if (k2 == j) continue;
            int ck = gcol[static_cast<size_t>(i)][static_cast<size_t>(k2)];
            int delta = nbr(gamma, i, k2, cc);
            auto [b1, b2, b3] = six_cycle_interior(oracle, beta, delta, gamma);

            ColorState st1 = bcol;
            st1[static_cast<size_t>(i)][static_cast<size_t>(k2)] = cj;
            discover(b1, st1);
            ColorState st2 = st1;
            st2[static_cast<size_t>(i)][static_cast<size_t>(j)] = ck;
            discover(b2, st2);
            ColorState st3 = st2;
            st3[static_cast<size_t>(i)][static_cast<size_t>(k2)] = cc;
            discover(b3, st3);

            register_edge(beta, b1, i, k2, ck, cj);
            register_edge(b1, b2, i, j, cc, ck);
            register_edge(b2, b3, i, k2, cj, cc);
            register_edge(b3, delta, i, j, ck, cj);
        }

        // (b) parts of the same component moving to a different free color
        // close squares
        for (int k2 = 0; k2 < chi[static_cast<size_t>(i)]; k2++) {
            if (k2 == j) continue;
            int ck = gcol[static_cast<size_t>(i)][static_cast<size_t>(k2)];
            for (int ct : fr[static_cast<size_t>(i)]) {
                if (ct == cc) continue;
                int delta = nbr(gamma, i, k2, ct);
                int b1 = square_interior(beta, delta, gamma);
                ColorState st1 = bcol;
                st1[static_cast<size_t>(i)][static_cast<size_t>(k2)] = ct;
                discover(b1, st1);
                register_edge(beta, b1, i, k2, ck, ct);
                register_edge(b1, delta, i, j, cc, cj);
            }
        }

        // (c) the moved part itself going to a different free color closes a
        // triangle, because delta -> beta is a single part move too
        for (int ct : fr[static_cast<size_t>(i)]) {
            if (ct == cc) continue;
            int delta = nbr(gamma, i, j, ct);
            register_edge(delta, beta, i, j, ct, cc);
        }

        // (d) parts of other components close squares
        for (size_t ell = 0; ell < chi.size(); ell++) {
            if (static_cast<int>(ell) == i) continue;
            for (int k2 = 0; k2 < chi[ell]; k2++) {
                int cs = gcol[ell][static_cast<size_t>(k2)];
                for (int ct : fr[ell]) {
                    int delta = nbr(gamma, static_cast<int>(ell), k2, ct);
                    int b1 = square_interior(beta, delta, gamma);
                    ColorState st1 = bcol;
                    st1[ell][static_cast<size_t>(k2)] = ct;
                    discover(b1, st1);
                    register_edge(beta, b1, static_cast<int>(ell), k2, cs, ct);
                    register_edge(b1, delta, i, j, cc, cj);
                }
            }
        }
    }

    LabeledLinkGraph run() {
        init();
        long long processed = 0;
        while (!queue.empty()) {
            int beta = queue.front();
            queue.pop_front();
            if (++processed > c.n)
                throw StructuralError("link graph search visited more vertices than exist");
            process(beta);
            done.insert(beta);
        }

        for (const auto& [v, m] : out)
            if (static_cast<long long>(m.size()) != degree)
                throw StructuralError("vertex " + std::to_string(v) + " has " +
                                      std::to_string(m.size()) + " labeled moves, expected " +
                                      std::to_string(degree));

        LabeledLinkGraph llg;
        llg.anchor = alpha;
        llg.k = k;
        llg.chi = chi;
        llg.f = f;
        llg.part_sizes = part_sizes;
        llg.partition = partition;
        std::map<int, int> local;
        for (const auto& [v, st] : colors) {
            local.emplace(v, static_cast<int>(llg.verts.size()));
            llg.verts.push_back(v);
            llg.part_colors.push_back(st);
        }
        std::vector<std::pair<int, int>> es;
        es.reserve(labels.size());
        for (const auto& [key, lab] : labels) {
            es.emplace_back(local.at(key.first), local.at(key.second));
            llg.edge_labels.push_back({lab[0], lab[1], lab[2], lab[3]});
        }
        // keys ascend in both coordinates, and local ids preserve vertex
        // order, so this edge list is already in SimpleGraph's sorted order
        llg.skeleton = SimpleGraph(static_cast<int>(llg.verts.size()), std::move(es));
        return llg;
    }
};

} // namespace

std::vector<int> equivalence_class(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                   const Budget& budget) {
    MoveOracle oracle{c, rep, budget, {}};
    std::set<int> seen{alpha};
    std::deque<int> q{alpha};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const ClassMove& mv : oracle.at(x))
            if (seen.insert(mv.to).second) q.push_back(mv.to);
    }
    return {seen.begin(), seen.end()};
}

LabeledLinkGraph build_link_graph(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                  const Budget& budget) {
    Builder b(c, rep, alpha, budget);
    return b.run();
}

std::array<int, 3> unique_avoiding_path(const SimpleGraph& c, const LinkReport& rep, int alpha,
                                        int alpha1, int alpha2, const Budget& budget) {
    MoveOracle oracle{c, rep, budget, {}};
    ClassMove m1{}, m2{};
    bool f1 = false, f2 = false;
    for (const ClassMove& mv : oracle.at(alpha)) {
        if (mv.to == alpha1) m1 = mv, f1 = true;
        if (mv.to == alpha2) m2 = mv, f2 = true;
    }
    if (!f1 || !f2)
        throw std::invalid_argument("endpoints must both be class moves of the avoided vertex");
    if (m1.comp != m2.comp)
        throw std::invalid_argument("endpoints move parts of different components");
    if (m1.part == m2.part)
        throw std::invalid_argument("endpoints move the same part");
    if (m1.sel != m2.sel)
        throw std::invalid_argument("endpoints move to different free colors");
    // leaving alpha1, the first hop moves alpha2's part, and they alternate
    return six_cycle_interior(oracle, alpha1, alpha2, alpha);
}

std::string llg_to_json(const LabeledLinkGraph& llg) {
    nlohmann::json j;
    j["kind"] = "link_graph";
    j["anchor"] = llg.anchor;
    j["k"] = llg.k;
    j["chi"] = llg.chi;
    j["free_colors"] = llg.f;
    j["part_sizes"] = llg.part_sizes;
    j["verts"] = llg.verts;
    j["part_colors"] = llg.part_colors;
    j["partition"] = nlohmann::json::array();
    for (const auto& cp : llg.partition.components)
        j["partition"].push_back({{"cliques", cp.cliques}, {"parts", cp.parts}});
    j["edges"] = nlohmann::json::array();
    for (size_t e = 0; e < llg.skeleton.edges.size(); e++) {
        const auto& [lu, lv] = llg.skeleton.edges[e];
        const LinkEdgeLabel& lab = llg.edge_labels[e];
        j["edges"].push_back({{"u", llg.verts[static_cast<size_t>(lu)]},
                              {"v", llg.verts[static_cast<size_t>(lv)]},
                              {"comp", lab.comp},
                              {"part", lab.part},
                              {"color_u", lab.color_u},
                              {"color_v", lab.color_v}});
    }
    return j.dump();
}

std::string llg_to_dot(const LabeledLinkGraph& llg) {
    std::string s = "graph link_graph {\n  node [shape=box, fontsize=10];\n";
    for (size_t i = 0; i < llg.verts.size(); i++) {
        std::string state;
        for (size_t comp = 0; comp < llg.part_colors[i].size(); comp++) {
            if (comp) state += "|";
            for (size_t p = 0; p < llg.part_colors[i][comp].size(); p++) {
                if (p) state += ",";
                state += std::to_string(llg.part_colors[i][comp][p]);
            }
        }
        s += "  n" + std::to_string(llg.verts[i]) + " [label=\"" +
             std::to_string(llg.verts[i]) + "\\n" + state + "\"";
        if (llg.verts[i] == llg.anchor) s += ", style=filled, fillcolor=lightsalmon";
        s += "];\n";
    }
    for (size_t e = 0; e < llg.skeleton.edges.size(); e++) {
        const auto& [lu, lv] = llg.skeleton.edges[e];
        const LinkEdgeLabel& lab = llg.edge_labels[e];
        s += "  n" + std::to_string(llg.verts[static_cast<size_t>(lu)]) + " -- n" +
             std::to_string(llg.verts[static_cast<size_t>(lv)]) + " [label=\"p" +
             std::to_string(lab.comp + 1) + "." + std::to_string(lab.part + 1) + " " +
             std::to_string(lab.color_u) + ":" + std::to_string(lab.color_v) + "\"];\n";
    }
    s += "}\n";
    return s;
}

} // namespace recolor
