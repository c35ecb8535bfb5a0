#pragma once

// Exact treewidth of small graphs by dynamic programming over vertex
// subsets (elimination orders), and homomorphism-hereditary treewidth:
// the maximum treewidth over all simple quotients of F by partitions
// into independent blocks, which are exactly the vertex- and
// edge-surjective homomorphic images of F.

#include <wlpack/graph.hpp>
#include <wlpack/rational.hpp>

namespace wlpack {

// Held-Karp style elimination DP. For a set S of eliminated vertices,
// the cost of eliminating v next is the number of vertices outside S
// reachable from v through S.
inline int treewidth(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw resource_limit_error("treewidth: graph too large for subset DP");
    if (n == 0) return -1;  // conventional: empty graph
    if (g.edge_count() == 0) return 0;

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    auto elim_degree = [&](std::uint32_t s, int v) {
        // neighbors of v in V \ s via paths inside s
        std::uint32_t seen = 1u << v, frontier = adj[v], result = 0;
        while (frontier) {
            std::uint32_t fresh = frontier & ~seen;
            seen |= fresh;
            frontier = 0;
            std::uint32_t inside = fresh & s;
            result |= fresh & ~s;
            while (inside) {
                int w = __builtin_ctz(inside);
                inside &= inside - 1;
                frontier |= adj[w];
            }
        }
        return __builtin_popcount(result);
    };

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> best((size_t)full + 1, INT32_MAX);
    best[0] = 0;
    for (std::uint32_t s = 0; s <= full; s++) {
        if (best[s] == INT32_MAX) continue;
        for (int v = 0; v < n; v++) {
            if (s & (1u << v)) continue;
            int cost = std::max(best[s], elim_degree(s, v));
            std::uint32_t t = s | (1u << v);
            if (cost < best[t]) best[t] = cost;
        }
        if (s == full) break;
    }
    return best[full];
}

namespace detail {

// Enumerate set partitions of 0..l-1 whose blocks are independent sets of
// f; for each, hand the quotient graph to the callback.
template <class Fn>
inline void independent_quotients(const Graph& f, Fn&& fn) {
    const int l = f.vertex_count();
    std::vector<int> block_of(l, -1);

    auto rec = [&](auto&& self, int v, int blocks) -> void {
        if (v == l) {
            std::vector<Edge> edges;
            for (const auto& [a, b] : f.edges()) {
                int x = block_of[a], y = block_of[b];
                edges.push_back({std::min(x, y), std::max(x, y)});
            }
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            fn(Graph(blocks, std::move(edges)));
            return;
        }
        for (int b = 0; b <= blocks; b++) {
            bool independent = true;
            for (int w = 0; w < v && independent; w++)
                if (block_of[w] == b && f.has_edge(v, w)) independent = false;
            if (!independent) continue;
            block_of[v] = b;
            self(self, v + 1, std::max(blocks, b + 1));
            block_of[v] = -1;
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

// Maximum treewidth over all homomorphic images of F. Adjacent vertices
// never merge (images are simple graphs), and image edges are exactly the
// projected edges (edge surjectivity).
inline int htw(const Graph& f) {
    if (f.vertex_count() > 8) throw resource_limit_error("htw: pattern exceeds vertex cap");
    int best = -1;
    detail::independent_quotients(f, [&](const Graph& image) {
        best = std::max(best, treewidth(image));
    });
    return best;
}

}  // namespace wlpack
