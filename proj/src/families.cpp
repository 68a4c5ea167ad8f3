#include "recolor/families.hpp"

#include <cctype>
#include <charconv>

namespace recolor {

SimpleGraph townhouse(int n) {
    if (n < 1) throw std::invalid_argument("townhouse: need at least one house");
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {2, 4}};
    std::vector<std::string> names = {"A1", "B1", "C1", "D1", "R1"};
    int b = 1, c = 2, r = 4; // right wall corners and apex of the last house
    for (int i = 2; i <= n; i++) {
        int nb = 3 * i - 1, nc = 3 * i, nr = 3 * i + 1;
        es.push_back({b, nb});  // floor
        es.push_back({nb, nc}); // new right wall
        es.push_back({c, nc});  // top side
        es.push_back({c, nr});  // gable left
        es.push_back({nc, nr});// gable right
        es.push_back({r, nr});  // rooftop ridge
        names.push_back("B" + std::to_string(i));
        names.push_back("C" + std::to_string(i));
        names.push_back("R" + std::to_string(i));
        b = nb;
        c = nc;
        r = nr;
    }
    SimpleGraph g(3 * n + 2, std::move(es));
    g.names = std::move(names);
    return g;
}

SimpleGraph basement_townhouse(int n) {
    SimpleGraph th = townhouse(n);
    std::vector<std::pair<int, int>> es = th.edges;
    std::vector<std::string> names = th.names;
    int base = th.n;
    auto floor_corner = [](int j) { return j == 0 ? 0 : (j == 1 ? 1 : 3 * j - 1); };
    for (int i = 1; i <= n; i++) {
        int q = base + i - 1;
        es.push_back({floor_corner(i - 1), q});
        es.push_back({floor_corner(i), q});
        names.push_back("Q" + std::to_string(i));
    }
    SimpleGraph g(base + n, std::move(es));
    g.names = std::move(names);
    return g;
}

SimpleGraph cone(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> es = g.edges;
    for (int v = 0; v < g.n; v++) es.push_back({v, g.n});
    return SimpleGraph(g.n + 1, std::move(es));
}

namespace {

int parse_int(const std::string& s, size_t from, size_t to) {
    int x = 0;
    auto res = std::from_chars(s.data() + from, s.data() + to, x);
    if (res.ec != std::errc{} || res.ptr != s.data() + to)
        throw std::invalid_argument("bad graph name parameter: " + s);
    return x;
}

} // namespace

SimpleGraph named_graph(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty graph name");
    std::string lower;
    for (char ch : name) lower.push_back(static_cast<char>(std::tolower(ch)));

    if (lower == "paw") {
        // triangle 1,2,3 plus pendant 0 on vertex 1
        SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
        g.names = {"v1", "v2", "v3", "v4"};
        return g;
    }
    if (lower == "house") {
        // square 0,1,2,3 with apex 4 over the wall 2-3
        return SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}});
    }
    if (lower == "diamond") {
        // K_4 minus the edge 2-3
        return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    }

    char fam = lower[0];
    size_t comma = lower.find(',');
    if (fam == 'k' && comma != std::string::npos) {
        int r = parse_int(lower, 1, comma);
        int s = parse_int(lower, comma + 1, lower.size());
        if (r < 1 || s < 1) throw std::invalid_argument("K_{r,s}: parts must be nonempty");
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < r; i++)
            for (int j = 0; j < s; j++) es.push_back({i, r + j});
        return SimpleGraph(r + s, std::move(es));
    }

    int p = parse_int(lower, 1, lower.size());
    switch (fam) {
        case 'k': {
            if (p < 1) throw std::invalid_argument("K_n: n >= 1");
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < p; i++)
                for (int j = i + 1; j < p; j++) es.push_back({i, j});
            return SimpleGraph(p, std::move(es));
        }
        case 'p': {
            if (p < 1) throw std::invalid_argument("P_n: n >= 1");
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i + 1 < p; i++) es.push_back({i, i + 1});
            return SimpleGraph(p, std::move(es));
        }
        case 'c': {
            if (p < 3) throw std::invalid_argument("C_n: n >= 3");
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < p; i++) es.push_back({i, (i + 1) % p});
            return SimpleGraph(p, std::move(es));
        }
        case 'n': {
            if (p < 0) throw std::invalid_argument("N_r: r >= 0");
            return SimpleGraph(p, {});
        }
        case 'f': {
            if (p < 1) throw std::invalid_argument("F_m: m >= 1");
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < p; i++) {
                es.push_back({0, 2 * i + 1});
                es.push_back({0, 2 * i + 2});
                es.push_back({2 * i + 1, 2 * i + 2});
            }
            return SimpleGraph(2 * p + 1, std::move(es));
        }
        default:
            throw std::invalid_argument("unknown graph family: " + name);
    }
}

} // namespace recolor
