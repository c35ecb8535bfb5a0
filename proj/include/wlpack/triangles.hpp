#pragma once

// Complete edge-disjoint triangle decompositions and the odd-degree
// lower bound on edges left uncovered by an optimal triangle packing.

#include <wlpack/generators.hpp>

#include <array>
#include <optional>

namespace wlpack {

using Triangle = std::array<int, 3>;  // sorted vertices

namespace detail {

// Does g equal the tensor product of its row-major coordinate
// projections for the split n = n1 * n2? Returns the factors if so.
inline std::optional<std::pair<Graph, Graph>> tensor_split(const Graph& g, int n1, int n2) {
    std::vector<Edge> e1, e2;
    for (const auto& [a, b] : g.edges()) {
        int a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
        if (a1 == b1 || a2 == b2) return {};  // tensor edges differ in both coordinates
        e1.push_back({std::min(a1, b1), std::max(a1, b1)});
        e2.push_back({std::min(a2, b2), std::max(a2, b2)});
    }
    std::sort(e1.begin(), e1.end());
    e1.erase(std::unique(e1.begin(), e1.end()), e1.end());
    std::sort(e2.begin(), e2.end());
    e2.erase(std::unique(e2.begin(), e2.end()), e2.end());
    Graph g1(n1, e1), g2(n2, e2);
    if ((long long)g.edge_count() != 2LL * g1.edge_count() * g2.edge_count()) return {};
    for (const auto& [u, v] : g1.edges())
        for (const auto& [x, y] : g2.edges()) {
            if (!g.has_edge(u * n2 + x, v * n2 + y)) return {};
            if (!g.has_edge(u * n2 + y, v * n2 + x)) return {};
        }
    return std::make_pair(std::move(g1), std::move(g2));
}

inline std::optional<std::vector<Triangle>> exhaustive_decompose(const Graph& g) {
    const int m = g.edge_count();
    if (m % 3 != 0) return {};
    std::vector<char> covered(m, 0);
    std::vector<Triangle> acc;

    auto rec = [&](auto&& self, int from) -> bool {
        int e = from;
        while (e < m && covered[e]) e++;
        if (e == m) return true;
        auto [u, v] = g.edges()[e];
        for (int w : g.neighbors(u)) {
            if (w == v || !g.has_edge(v, w)) continue;
            int e2 = g.edge_index(u, w), e3 = g.edge_index(v, w);
            if (covered[e2] || covered[e3]) continue;
            covered[e] = covered[e2] = covered[e3] = 1;
            Triangle t{u, v, w};
            std::sort(t.begin(), t.end());
            acc.push_back(t);
            if (self(self, e + 1)) return true;
            acc.pop_back();
            covered[e] = covered[e2] = covered[e3] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return {};
    return acc;
}

}  // namespace detail

// Tries to split E(G) into edge-disjoint triangles. Strategies, in
// order: the closed-form triangles {(i,j),(i+1,j),(i+1,j+1)} when G is
// the Shrikhande graph in its standard labeling; recursion over a
// row-major tensor factorization, combining factor decompositions into
// the six diagonal triangles per triangle pair; exhaustive search for up
// to 60 edges. Absence means no strategy applied, not a proof of
// indecomposability.
inline std::optional<std::vector<Triangle>> k3_decompose(const Graph& g) {
    if (g.edge_count() == 0) return std::vector<Triangle>{};
    if (g.edge_count() % 3 != 0) return {};

    // (a) Shrikhande closed form
    if (g.vertex_count() == 16 && g.edge_count() == 48) {
        auto id = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };
        std::vector<Triangle> tris;
        bool ok = true;
        std::vector<char> covered(48, 0);
        for (int i = 0; i < 4 && ok; i++)
            for (int j = 0; j < 4 && ok; j++) {
                int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1);
                if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) {
                    ok = false;
                    break;
                }
                for (int e : {g.edge_index(a, b), g.edge_index(b, c), g.edge_index(a, c)}) {
                    if (covered[e]) ok = false;
                    covered[e] = 1;
                }
                Triangle t{a, b, c};
                std::sort(t.begin(), t.end());
                tris.push_back(t);
            }
        if (ok && std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; }))
            return tris;
    }

    // (b) tensor factorization; both factors must decompose completely
    const int n = g.vertex_count();
    for (int n1 = 2; n1 * 2 <= n; n1++) {
        if (n % n1 != 0) continue;
        int n2 = n / n1;
        auto split = detail::tensor_split(g, n1, n2);
        if (!split) continue;
        auto t1 = k3_decompose(split->first);
        if (!t1) continue;
        auto t2 = k3_decompose(split->second);
        if (!t2) continue;
        // t x t' decomposes into the 6 triangles {(a_i, b_perm(i))}.
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        std::vector<Triangle> tris;
        for (const auto& ta : *t1)
            for (const auto& tb : *t2)
                for (const auto& p : perms) {
                    Triangle t{ta[0] * n2 + tb[p[0]], ta[1] * n2 + tb[p[1]],
                               ta[2] * n2 + tb[p[2]]};
                    std::sort(t.begin(), t.end());
                    tris.push_back(t);
                }
        return tris;
    }

    // (c) exhaustive search
    if (g.edge_count() <= 60) return detail::exhaustive_decompose(g);
    return {};
}

// ceil(v_odd / 2): a certified lower bound on the number of edges no
// edge-disjoint triangle packing can cover.
inline long long uncovered_edges_lower_bound(const Graph& g) {
    long long odd = 0;
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) % 2 == 1) odd++;
    return (odd + 1) / 2;
}

// Checks that a list of triangles is an exact partition of E(G).
inline bool is_complete_triangle_decomposition(const Graph& g,
                                               const std::vector<Triangle>& tris) {
    std::vector<char> covered(g.edge_count(), 0);
    for (const auto& t : tris) {
        if (!g.has_edge(t[0], t[1]) || !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
            return false;
        for (int e : {g.edge_index(t[0], t[1]), g.edge_index(t[1], t[2]),
                      g.edge_index(t[0], t[2])}) {
            if (covered[e]) return false;
            covered[e] = 1;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; });
}

}  // namespace wlpack
