#include "recolor/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace recolor {

SimpleGraph::SimpleGraph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    edges = std::move(edges_);

    adj.assign(n, {});
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1ull;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; s++) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.adj[v])
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out; // discovery from ascending seeds => ordered by minimum vertex id
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < verts.size(); i++) index[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
    return SimpleGraph(static_cast<int>(verts.size()), std::move(es));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<std::pair<int, int>> es = a.edges;
    es.reserve(a.edges.size() + b.edges.size());
    for (auto [u, v] : b.edges) es.emplace_back(u + a.n, v + a.n);
    return SimpleGraph(a.n + b.n, std::move(es));
}

bool is_proper_coloring(const SimpleGraph& g, const std::vector<uint8_t>& colors) {
    if (static_cast<int>(colors.size()) != g.n)
        throw std::invalid_argument("coloring length != vertex count");
    for (auto [u, v] : g.edges)
        if (colors[u] == colors[v]) return false;
    return true;
}

namespace {

// Greedy clique through each start vertex; returns a genuine clique, so its
// size is a valid lower bound for the chromatic number.
int greedy_clique_bound(const SimpleGraph& g) {
    int best = g.n > 0 ? 1 : 0;
    for (int s = 0; s < g.n; s++) {
        std::vector<int> clique{s};
        for (int v : g.adj[s]) {
            bool ok = true;
            for (int c : clique)
                if (!g.has_edge(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

struct KColorSearch {
    const SimpleGraph& g;
    int k;
    std::vector<int> color;      // 0 = unassigned, else 1..k
    std::vector<int> sat_count;  // number of distinct neighbor colors
    std::vector<uint64_t> sat_mask;

    explicit KColorSearch(const SimpleGraph& g_, int k_)
        : g(g_), k(k_), color(g_.n, 0), sat_count(g_.n, 0), sat_mask(g_.n, 0) {}

    bool solve(int assigned, int max_used) {
        if (assigned == g.n) return true;
        // DSATUR: highest saturation, tie-break by degree then id.
        int pick = -1;
        for (int v = 0; v < g.n; v++) {
            if (color[v]) continue;
            if (pick == -1 || sat_count[v] > sat_count[pick] ||
                (sat_count[v] == sat_count[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int limit = std::min(k, max_used + 1); // new colors are interchangeable
        for (int c = 1; c <= limit; c++) {
            if (sat_mask[pick] & (1ull << c)) continue;
            color[pick] = c;
            std::vector<int> bumped;
            for (int w : g.adj[pick])
                if (!color[w] && !(sat_mask[w] & (1ull << c))) {
                    sat_mask[w] |= 1ull << c;
                    sat_count[w]++;
                    bumped.push_back(w);
                }
            if (solve(assigned + 1, std::max(max_used, c))) return true;
            for (int w : bumped) {
                sat_mask[w] &= ~(1ull << c);
                sat_count[w]--;
            }
            color[pick] = 0;
        }
        return false;
    }
};

bool k_colorable(const SimpleGraph& g, int k) {
    if (k >= g.n) return true;
    if (k > 62) throw std::invalid_argument("k-colorability search limited to k <= 62");
    KColorSearch s(g, k);
    return s.solve(0, 0);
}

} // namespace

int chromatic_number(const SimpleGraph& g) {
    if (g.n == 0) return 0;
    if (g.edges.empty()) return 1;
    for (int k = greedy_clique_bound(g); ; k++)
        if (k_colorable(g, k)) return k;
}

// --- serialization ---------------------------------------------------------

std::string graph_to_json(const SimpleGraph& g) {
    nlohmann::json j;
    j["kind"] = "graph";
    j["n"] = g.n;
    auto es = nlohmann::json::array();
    for (auto [u, v] : g.edges) es.push_back({u, v});
    j["edges"] = std::move(es);
    if (!g.names.empty()) j["names"] = g.names;
    return j.dump();
}

SimpleGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    if (j.contains("kind") && j["kind"] != "graph")
        throw std::invalid_argument("expected JSON of kind \"graph\", got \"" +
                                    j["kind"].get<std::string>() + "\"");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    SimpleGraph g(j["n"].get<int>(), std::move(es));
    if (j.contains("names")) g.names = j["names"].get<std::vector<std::string>>();
    return g;
}

std::string graph_to_graph6(const SimpleGraph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6 output limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.n; j++)
        for (int i = 0; i < j; i++) {
            if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

SimpleGraph graph_from_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) throw std::invalid_argument("empty graph6 line");
    s = s.substr(start);
    if (s.size() > 2 && s.compare(0, 2, ">>") == 0) { // optional ">>graph6<<" header
        size_t p = s.find("<<");
        if (p != std::string::npos) s = s.substr(p + 2);
    }
    if (s.empty()) throw std::invalid_argument("empty graph6 line");
    int n = s[0] - 63;
    if (n < 0 || n > 62)
        throw std::invalid_argument("graph6 input limited to n <= 62");
    long long need = (static_cast<long long>(n) * (n - 1) / 2 + 5) / 6;
    if (static_cast<long long>(s.size()) - 1 < need)
        throw std::invalid_argument("graph6 line too short");
    std::vector<std::pair<int, int>> es;
    long long k = 0;
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++, k++) {
            char c = s[1 + k / 6];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6 bad byte");
            if ((c - 63) & (1 << (5 - k % 6))) es.emplace_back(i, j);
        }
    return SimpleGraph(n, std::move(es));
}

SimpleGraph graph_from_text(const std::string& text) {
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw std::invalid_argument("empty graph input");
    if (text[p] == '{') return graph_from_json(text);
    std::string line = text.substr(p);
    size_t nl = line.find('\n');
    if (nl != std::string::npos) line = line.substr(0, nl);
    return graph_from_graph6(line);
}

std::string graph_to_dot(const SimpleGraph& g, const std::vector<int>& highlight,
                         const std::vector<std::string>& edge_labels) {
    std::vector<char> mark(g.n, 0);
    for (int v : highlight) mark[v] = 1;
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; v++) {
        os << "  " << v;
        std::string label = v < static_cast<int>(g.names.size()) ? g.names[v] : "";
        os << " [";
        if (!label.empty()) os << "label=\"" << label << "\" ";
        if (mark[v]) os << "style=filled fillcolor=salmon ";
        os << "]\n";
    }
    for (size_t i = 0; i < g.edges.size(); i++) {
        os << "  " << g.edges[i].first << " -- " << g.edges[i].second;
        if (i < edge_labels.size() && !edge_labels[i].empty())
            os << " [label=\"" << edge_labels[i] << "\"]";
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace recolor
