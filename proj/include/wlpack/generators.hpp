#pragma once

// Named graph families and graph products. Product graphs index vertex
// pairs row-major: (u, u') -> u * n_H + u'.

#include <wlpack/graph.hpp>

#include <numeric>
#include <set>
#include <string>

namespace wlpack {

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
    return Graph(n, std::move(e));
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) e.push_back({u, v});
    return Graph(n, std::move(e));
}

inline Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bipartite: need s,t >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < s; u++)
        for (int v = 0; v < t; v++) e.push_back({u, s + v});
    return Graph(s + t, std::move(e));
}

// Star K_{1,t} with the center as vertex 0.
inline Graph make_star(int t) { return make_complete_bipartite(1, t); }

// Cayley graph of Z_n: x ~ y iff x - y in C. C must exclude 0 and be
// closed under negation mod n.
inline Graph make_circulant(int n, const std::set<int>& connection) {
    if (n < 1) throw std::invalid_argument("circulant: need n >= 1");
    for (int c : connection) {
        if (c <= 0 || c >= n) throw std::invalid_argument("circulant: step out of range 1..n-1");
        if (!connection.count((n - c) % n))
            throw std::invalid_argument("circulant: connection set not symmetric");
    }
    std::vector<Edge> e;
    for (int u = 0; u < n; u++)
        for (int c : connection) {
            int v = (u + c) % n;
            if (u < v) e.push_back({u, v});
        }
    return Graph(n, std::move(e));
}

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; d++)
        if (q % d == 0) return false;
    return true;
}

// Quadratic-residue circulant on Z_q, for prime q = 1 (mod 4). Prime
// powers would need GF(q) arithmetic and are rejected.
inline Graph make_paley(int q) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("paley: need a prime q with q = 1 (mod 4)");
    std::set<int> residues;
    for (long long x = 1; x < q; x++) residues.insert((int)((x * x) % q));
    return make_circulant(q, residues);
}

// The 16-vertex Shrikhande graph on Z_4 x Z_4, vertex (i,j) -> 4i + j.
// (i,j) ~ (i',j') iff (i=i', j'=j+1) or (j=j', i'=i+1) or (i'=i+1, j'=j+1).
inline Graph make_shrikhande() {
    std::vector<Edge> e;
    auto id = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) {
            e.push_back({id(i, j), id(i, j + 1)});
            e.push_back({id(i, j), id(i + 1, j)});
            e.push_back({id(i, j), id(i + 1, j + 1)});
        }
    return Graph(16, std::move(e));
}

// The 4x4 rook's graph on Z_4 x Z_4: same row or same column.
inline Graph make_rook4() {
    std::vector<Edge> e;
    for (int u = 0; u < 16; u++)
        for (int v = u + 1; v < 16; v++)
            if (u / 4 == v / 4 || u % 4 == v % 4) e.push_back({u, v});
    return Graph(16, std::move(e));
}

// Two disjoint s-cliques {0..s-1} and {s..2s-1} joined by the perfect
// matching i ~ s+i.
inline Graph make_matched_cliques(int s) {
    if (s < 2) throw std::invalid_argument("matched_cliques: need s >= 2");
    std::vector<Edge> e;
    for (int u = 0; u < s; u++)
        for (int v = u + 1; v < s; v++) {
            e.push_back({u, v});
            e.push_back({s + u, s + v});
        }
    for (int u = 0; u < s; u++) e.push_back({u, s + u});
    return Graph(2 * s, std::move(e));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    std::vector<Edge> e = g.edges();
    for (const auto& [u, v] : h.edges()) e.push_back({ng + u, ng + v});
    std::vector<int> colors;
    if (g.colored() || h.colored()) {
        for (int v = 0; v < ng; v++) colors.push_back(g.color(v));
        for (int v = 0; v < h.vertex_count(); v++) colors.push_back(h.color(v));
    }
    return Graph(ng + h.vertex_count(), std::move(e), std::move(colors));
}

// k vertex-disjoint copies of g.
inline Graph scalar_multiple(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("scalar_multiple: need k >= 0");
    Graph acc(0, {});
    for (int i = 0; i < k; i++) acc = disjoint_union(acc, g);
    return acc;
}

// (u,u') ~ (v,v') iff u ~ v and u' ~ v'.
inline Graph tensor_product(const Graph& g, const Graph& h) {
    int nh = h.vertex_count();
    std::vector<Edge> e;
    for (const auto& [u, v] : g.edges())
        for (const auto& [x, y] : h.edges()) {
            e.push_back({u * nh + x, v * nh + y});
            e.push_back({u * nh + y, v * nh + x});
        }
    return Graph(g.vertex_count() * nh, std::move(e));
}

// (u,u') ~ (v,v') iff (u = v and u' ~ v') or (u ~ v and u' = v').
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    int nh = h.vertex_count();
    std::vector<Edge> e;
    for (int u = 0; u < g.vertex_count(); u++)
        for (const auto& [x, y] : h.edges()) e.push_back({u * nh + x, u * nh + y});
    for (const auto& [u, v] : g.edges())
        for (int x = 0; x < nh; x++) e.push_back({u * nh + x, v * nh + x});
    return Graph(g.vertex_count() * nh, std::move(e));
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int u = 0; u < g.vertex_count(); u++)
        for (int v = u + 1; v < g.vertex_count(); v++)
            if (!g.has_edge(u, v)) e.push_back({u, v});
    return Graph(g.vertex_count(), std::move(e), g.colors());
}

// Relabel vertices by the permutation perm (vertex v becomes perm[v]).
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.vertex_count())
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<Edge> e;
    for (const auto& [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
    std::vector<int> colors;
    if (g.colored()) {
        colors.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); v++) colors[perm[v]] = g.color(v);
    }
    return Graph(g.vertex_count(), std::move(e), std::move(colors));
}

// Provenance tag for experiment reports: which family a graph came from
// and with which parameters.
struct GraphLabel {
    enum class Family {
        cycle,
        path,
        complete,
        complete_bipartite,
        circulant,
        paley,
        shrikhande,
        rook4,
        matched_cliques,
        disjoint_union,
        tensor_product,
        cartesian_product,
        from_file,
    };

    Family family;
    std::vector<long long> params;
    std::string note;  // free-form, e.g. a file name or a composite description

    std::string to_string() const {
        static const char* names[] = {
            "cycle",          "path",  "complete",        "complete_bipartite", "circulant",
            "paley",          "shrikhande", "rook4",      "matched_cliques",    "disjoint_union",
            "tensor_product", "cartesian_product", "from_file",
        };
        std::string s = names[(int)family];
        if (!params.empty()) {
            s += "(";
            for (size_t i = 0; i < params.size(); i++) {
                if (i) s += ",";
                s += std::to_string(params[i]);
            }
            s += ")";
        }
        if (!note.empty()) s += "[" + note + "]";
        return s;
    }
};

}  // namespace wlpack
