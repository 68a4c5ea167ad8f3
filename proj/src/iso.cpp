#include "recolor/iso.hpp"

#include <algorithm>
#include <cstring>

namespace recolor {

namespace {

// Equitable refinement over an adjacency-list graph. Cells are ordered; every
// split orders the sub-cells by an isomorphism-invariant signature, so cell
// positions carry no vertex-id information.
struct RefEngine {
    const std::vector<std::vector<int>>& adj;
    int n;

    explicit RefEngine(const std::vector<std::vector<int>>& adj_)
        : adj(adj_), n(static_cast<int>(adj_.size())) {}

    // One full re-signature pass; true if any cell split.
    bool pass(std::vector<std::vector<int>>& cells) const {
        std::vector<int> cell_of(n);
        for (size_t ci = 0; ci < cells.size(); ci++)
            for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);

        // sig(v) = run-length encoding of the sorted list of neighbor cells
        std::vector<std::vector<int>> sig(n);
        std::vector<int> tmp;
        for (int v = 0; v < n; v++) {
            tmp.clear();
            for (int w : adj[v]) tmp.push_back(cell_of[w]);
            std::sort(tmp.begin(), tmp.end());
            auto& s = sig[v];
            for (size_t i = 0; i < tmp.size();) {
                size_t j = i;
                while (j < tmp.size() && tmp[j] == tmp[i]) j++;
                s.push_back(tmp[i]);
                s.push_back(static_cast<int>(j - i));
                i = j;
            }
        }

        bool changed = false;
        std::vector<std::vector<int>> next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::stable_sort(cell.begin(), cell.end(),
                             [&](int a, int b) { return sig[a] < sig[b]; });
            size_t i = 0;
            while (i < cell.size()) {
                size_t j = i;
                while (j < cell.size() && sig[cell[j]] == sig[cell[i]]) j++;
                next.emplace_back(cell.begin() + i, cell.begin() + j);
                i = j;
            }
            if (next.back().size() != cell.size()) changed = true;
            // (comparing only the last sub-cell is wrong; detect via count)
        }
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
        return changed;
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        while (pass(cells)) {
        }
    }
};

void sort_cell_members(std::vector<std::vector<int>>& cells) {
    for (auto& c : cells) std::sort(c.begin(), c.end());
}

// --- canonical certificate --------------------------------------------------

void append_u32(std::string& s, uint32_t x) {
    for (int i = 3; i >= 0; i--) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

struct CanonSearch {
    const SimpleGraph& g;
    RefEngine eng;
    long long nodes = 0, cap;
    std::string best;
    bool have_best = false;

    CanonSearch(const SimpleGraph& g_, long long cap_) : g(g_), eng(g_.adj), cap(cap_) {}

    // All vertices of a cell are interchangeable when the cell is internally
    // complete or empty and uniform toward every other cell; such cells never
    // need branching.
    bool all_cells_twin(const std::vector<std::vector<int>>& cells) const {
        for (size_t ci = 0; ci < cells.size(); ci++) {
            const auto& c = cells[ci];
            if (c.size() == 1) continue;
            bool internal = g.has_edge(c[0], c[1]);
            for (size_t i = 0; i < c.size(); i++)
                for (size_t j = i + 1; j < c.size(); j++)
                    if (g.has_edge(c[i], c[j]) != internal) return false;
            for (size_t dj = 0; dj < cells.size(); dj++) {
                if (dj == ci) continue;
                const auto& d = cells[dj];
                bool block = g.has_edge(c[0], d[0]);
                for (int u : c)
                    for (int v : d)
                        if (g.has_edge(u, v) != block) return false;
            }
        }
        return true;
    }

    void emit_leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> order;
        order.reserve(g.n);
        for (const auto& c : cells)
            for (int v : c) order.push_back(v);
        std::string s;
        s.reserve(static_cast<size_t>(g.n) * g.n / 16 + 8);
        uint8_t cur = 0;
        int bit = 7;
        for (int i = 0; i < g.n; i++)
            for (int j = i + 1; j < g.n; j++) {
                if (g.has_edge(order[i], order[j])) cur |= static_cast<uint8_t>(1 << bit);
                if (--bit < 0) {
                    s.push_back(static_cast<char>(cur));
                    cur = 0;
                    bit = 7;
                }
            }
        if (bit != 7) s.push_back(static_cast<char>(cur));
        if (!have_best || s < best) {
            best = std::move(s);
            have_best = true;
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        if (++nodes > cap) throw BudgetError("canonical form search budget exceeded");
        eng.refine(cells);
        sort_cell_members(cells);
        size_t target = cells.size();
        size_t target_size = SIZE_MAX;
        for (size_t i = 0; i < cells.size(); i++)
            if (cells[i].size() > 1 && cells[i].size() < target_size) {
                target = i;
                target_size = cells[i].size();
            }
        if (target == cells.size() || all_cells_twin(cells)) {
            emit_leaf(cells);
            return;
        }
        for (int v : cells[target]) {
            auto child = cells;
            auto rest = child[target];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            child[target] = {v};
            child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
            search(std::move(child));
        }
    }
};

std::string certificate_connected(const SimpleGraph& g, const Budget& budget) {
    CanonSearch cs(g, budget.iso_nodes);
    if (g.n == 0) {
        std::string s = "C";
        append_u32(s, 0);
        return s;
    }
    cs.search({[&] {
        std::vector<int> all(g.n);
        for (int i = 0; i < g.n; i++) all[i] = i;
        return all;
    }()});
    std::string out = "C";
    append_u32(out, static_cast<uint32_t>(g.n));
    out += cs.best;
    return out;
}

} // namespace

std::string canonical_certificate(const SimpleGraph& g, const Budget& budget) {
    auto comps = connected_components(g);
    if (comps.size() <= 1) return certificate_connected(g, budget);
    std::vector<std::string> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps)
        parts.push_back(certificate_connected(induced_subgraph(g, c), budget));
    std::sort(parts.begin(), parts.end());
    std::string out = "U";
    append_u32(out, static_cast<uint32_t>(parts.size()));
    for (const auto& p : parts) {
        append_u32(out, static_cast<uint32_t>(p.size()));
        out += p;
    }
    return out;
}

std::vector<std::vector<int>> refine_partition(const SimpleGraph& g) {
    if (g.n == 0) return {};
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; i++) all[i] = i;
    std::vector<std::vector<int>> cells{all};
    RefEngine eng(g.adj);
    eng.refine(cells);
    sort_cell_members(cells);
    return cells;
}

// --- pairwise isomorphism ---------------------------------------------------

namespace {

struct IsoSearch {
    const SimpleGraph& a;
    const SimpleGraph& b;
    std::vector<std::vector<int>> uadj; // disjoint union; b shifted by a.n
    RefEngine eng;
    long long nodes = 0, cap;

    IsoSearch(const SimpleGraph& a_, const SimpleGraph& b_, long long cap_)
        : a(a_), b(b_), uadj(build_union(a_, b_)), eng(uadj), cap(cap_) {}

    static std::vector<std::vector<int>> build_union(const SimpleGraph& a, const SimpleGraph& b) {
        std::vector<std::vector<int>> adj(a.n + b.n);
        for (int v = 0; v < a.n; v++) adj[v] = a.adj[v];
        for (int v = 0; v < b.n; v++) {
            adj[a.n + v].reserve(b.adj[v].size());
            for (int w : b.adj[v]) adj[a.n + v].push_back(a.n + w);
        }
        return adj;
    }

    bool balanced(const std::vector<std::vector<int>>& cells) const {
        for (const auto& c : cells) {
            long long na = 0;
            for (int v : c) na += v < a.n;
            if (na * 2 != static_cast<long long>(c.size())) return false;
        }
        return true;
    }

    bool verify(const std::vector<int>& map) const {
        if (a.edge_count() != b.edge_count()) return false;
        for (auto [u, v] : a.edges)
            if (!b.has_edge(map[u], map[v])) return false;
        return true;
    }

    std::optional<std::vector<int>> search(std::vector<std::vector<int>> cells) {
        if (++nodes > cap) throw BudgetError("isomorphism search budget exceeded");
        eng.refine(cells);
        if (!balanced(cells)) return std::nullopt;
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); i++)
            if (cells[i].size() > 2 &&
                (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;
        if (target == cells.size()) {
            // every cell is one a-vertex plus one b-vertex
            std::vector<int> map(a.n, -1);
            for (const auto& c : cells) {
                int va = std::min(c[0], c[1]), vb = std::max(c[0], c[1]);
                if (va >= a.n || vb < a.n) return std::nullopt;
                map[va] = vb - a.n;
            }
            if (verify(map)) return map;
            return std::nullopt;
        }
        int va = -1;
        for (int v : cells[target])
            if (v < a.n && (va == -1 || v < va)) va = v;
        for (int vb : cells[target]) {
            if (vb < a.n) continue;
            auto child = cells;
            auto rest = child[target];
            rest.erase(std::find(rest.begin(), rest.end(), va));
            rest.erase(std::find(rest.begin(), rest.end(), vb));
            child[target] = {va, vb};
            child.insert(child.begin() + static_cast<long>(target) + 1, std::move(rest));
            if (auto m = search(std::move(child))) return m;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<std::vector<int>> graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                                                 const Budget& budget) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    if (a.n == 0) return std::vector<int>{};
    IsoSearch is(a, b, budget.iso_nodes);
    std::vector<int> all(a.n + b.n);
    for (int i = 0; i < a.n + b.n; i++) all[i] = i;
    return is.search({all});
}

} // namespace recolor
