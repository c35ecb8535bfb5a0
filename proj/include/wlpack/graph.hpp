#pragma once

// Simple undirected graphs with optional vertex colors. Vertices are
// 0..n-1, edges are stored sorted with u < v, and graphs are immutable
// after construction, so concurrent reads are safe.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wlpack {

using Edge = std::pair<int, int>;

class Graph {
  public:
    Graph() = default;

    // Normalizes and validates: endpoints in range, no self-loops, no
    // duplicate edges, color map (if given) total over 0..n-1.
    Graph(int n, std::vector<Edge> edges, std::vector<int> vertex_colors = {})
        : n_(n), edges_(std::move(edges)), colors_(std::move(vertex_colors)) {
        if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw std::invalid_argument("graph: endpoint out of range");
            if (u == v) throw std::invalid_argument("graph: self-loop");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("graph: duplicate edge");
        if (!colors_.empty()) {
            if ((int)colors_.size() != n_)
                throw std::invalid_argument("graph: color map not total");
            for (int c : colors_)
                if (c < 0) throw std::invalid_argument("graph: negative color");
        }
        adj_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int w = (&nb == &adj_[u]) ? v : u;
        return std::binary_search(nb.begin(), nb.end(), w);
    }

    // Position of {u,v} in the sorted edge list; edges are indexed
    // lexicographically over sorted endpoint pairs.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v})
            throw std::invalid_argument("graph: no such edge");
        return (int)(it - edges_.begin());
    }

    bool colored() const { return !colors_.empty(); }
    // 0 for all vertices of an uncolored graph.
    int color(int v) const { return colors_.empty() ? 0 : colors_[v]; }
    const std::vector<int>& colors() const { return colors_; }

    int component_count() const {
        std::vector<int> seen(n_, 0), stack;
        int comps = 0;
        for (int s = 0; s < n_; s++) {
            if (seen[s]) continue;
            comps++;
            stack.push_back(s);
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj_[v])
                    if (!seen[w]) seen[w] = 1, stack.push_back(w);
            }
        }
        return comps;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && colors_ == o.colors_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> colors_;  // empty = uncolored
    std::vector<std::vector<int>> adj_;
};

// Re-check the representation invariants; generators are run through this
// in tests.
inline void validate(const Graph& g) {
    Graph copy(g.vertex_count(), g.edges(), g.colors());  // ctor re-validates
    if (!(copy == g)) throw std::logic_error("graph: non-canonical representation");
}

}  // namespace wlpack
