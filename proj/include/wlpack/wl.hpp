#pragma once

// k-dimensional Weisfeiler-Leman refinement, run jointly over one or two
// graphs so that color ids live in one shared dictionary and palettes are
// directly comparable. Ids are deterministic: each round, the distinct
// signatures are sorted lexicographically and numbered consecutively;
// nothing is hashed irreversibly.

#include <wlpack/graph.hpp>
#include <wlpack/rational.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace wlpack {

struct WlOptions {
    std::size_t max_tuples = std::size_t(1) << 26;  // per graph, n^k
};

struct StableColoring {
    int k = 1;
    int graph_count = 1;
    std::array<int, 2> n{0, 0};
    // Flattened tuple colors, tuple (x_1..x_k) at index sum x_i * n^(k-i).
    std::array<std::vector<std::uint32_t>, 2> colors;
    int rounds_used = 0;
    std::array<std::map<std::uint32_t, long long>, 2> palettes;

    std::size_t flat_index(int g, const std::vector<int>& tuple) const {
        std::size_t idx = 0;
        for (int x : tuple) idx = idx * (std::size_t)n[g] + (std::size_t)x;
        return idx;
    }

    std::uint32_t tuple_color(int g, const std::vector<int>& tuple) const {
        if ((int)tuple.size() != k) throw std::invalid_argument("tuple arity != k");
        return colors[g][flat_index(g, tuple)];
    }

    // Stable color of the diagonal tuple (v,...,v).
    std::uint32_t vertex_color(int g, int v) const {
        std::size_t idx = 0;
        for (int i = 0; i < k; i++) idx = idx * (std::size_t)n[g] + (std::size_t)v;
        return colors[g][idx];
    }

    std::vector<std::uint32_t> vertex_colors(int g) const {
        std::vector<std::uint32_t> out(n[g]);
        for (int v = 0; v < n[g]; v++) out[v] = vertex_color(g, v);
        return out;
    }

    bool palettes_equal() const { return graph_count == 2 && palettes[0] == palettes[1]; }
};

namespace detail {

// Round-local signature interner. Ids handed out by intern() are
// provisional; final ids are the lexicographic ranks of the distinct
// signatures, which makes the numbering independent of insertion order.
class SigDict {
  public:
    int intern(const std::vector<std::uint64_t>& sig) {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : sig) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
        auto& bucket = buckets_[h];
        for (int idx : bucket)
            if (sigs_[idx] == sig) return idx;
        bucket.push_back((int)sigs_.size());
        sigs_.push_back(sig);
        return (int)sigs_.size() - 1;
    }

    std::size_t distinct() const { return sigs_.size(); }

    std::vector<std::uint32_t> lexicographic_ranks() const {
        std::vector<int> order(sigs_.size());
        for (size_t i = 0; i < order.size(); i++) order[i] = (int)i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sigs_[a] < sigs_[b]; });
        std::vector<std::uint32_t> rank(sigs_.size());
        for (size_t i = 0; i < order.size(); i++) rank[order[i]] = (std::uint32_t)i;
        return rank;
    }

  private:
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
    std::vector<std::vector<std::uint64_t>> sigs_;
};

inline std::uint64_t pack_pair(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
}

inline std::size_t checked_tuple_count(int n, int k, std::size_t cap) {
    std::size_t p = 1;
    for (int i = 0; i < k; i++) {
        if (n != 0 && p > cap / (std::size_t)n)
            throw resource_limit_error("wl_refine: n^k exceeds tuple cap");
        p *= (std::size_t)n;
    }
    if (p > cap) throw resource_limit_error("wl_refine: n^k exceeds tuple cap");
    return p;
}

}  // namespace detail

// Joint WL-k refinement of G (and H if given). Initial colors encode the
// ordered isomorphism type of each tuple (adjacency/equality pattern plus
// vertex colors); WL-1 starts from (vertex color, degree). Refines until
// the joint partition over both tuple spaces is stable.
inline StableColoring wl_refine(const Graph& G, const Graph* H, int k, WlOptions opts = {}) {
    if (k < 1) throw std::invalid_argument("wl_refine: need k >= 1");

    StableColoring sc;
    sc.k = k;
    sc.graph_count = H ? 2 : 1;
    const Graph* graphs[2] = {&G, H};
    std::array<std::size_t, 2> tuples{0, 0};
    for (int g = 0; g < sc.graph_count; g++) {
        sc.n[g] = graphs[g]->vertex_count();
        tuples[g] = detail::checked_tuple_count(sc.n[g], k, opts.max_tuples);
        sc.colors[g].assign(tuples[g], 0);
    }
    std::size_t total = tuples[0] + tuples[1];
    if (total == 0) return sc;

    std::array<std::vector<std::uint32_t>, 2> tmp;
    for (int g = 0; g < sc.graph_count; g++) tmp[g].resize(tuples[g]);

    // Round 0: ordered isomorphism types.
    std::size_t classes;
    {
        detail::SigDict dict;
        std::vector<std::uint64_t> sig;
        std::vector<int> tup(k);
        for (int g = 0; g < sc.graph_count; g++) {
            const Graph& gr = *graphs[g];
            int n = sc.n[g];
            for (std::size_t t = 0; t < tuples[g]; t++) {
                std::size_t rest = t;
                for (int i = k - 1; i >= 0; i--) {
                    tup[i] = (int)(rest % n);
                    rest /= n;
                }
                sig.clear();
                if (k == 1) {
                    sig.push_back((std::uint64_t)gr.color(tup[0]));
                    sig.push_back((std::uint64_t)gr.degree(tup[0]));
                } else {
                    for (int i = 0; i < k; i++)
                        for (int j = 0; j < k; j++)
                            sig.push_back(tup[i] == tup[j] ? 2
                                          : gr.has_edge(tup[i], tup[j]) ? 1
                                                                        : 0);
                    for (int i = 0; i < k; i++) sig.push_back((std::uint64_t)gr.color(tup[i]));
                }
                tmp[g][t] = (std::uint32_t)dict.intern(sig);
            }
        }
        auto rank = dict.lexicographic_ranks();
        for (int g = 0; g < sc.graph_count; g++)
            for (std::size_t t = 0; t < tuples[g]; t++) sc.colors[g][t] = rank[tmp[g][t]];
        classes = dict.distinct();
    }

    // Refinement rounds until the joint partition stops splitting.
    int round = 0;
    while (true) {
        round++;
        detail::SigDict dict;
        std::vector<std::uint64_t> sig;
        std::vector<std::uint64_t> block;
        std::vector<std::vector<std::uint64_t>> blocks;
        std::vector<int> tup(k);

        for (int g = 0; g < sc.graph_count; g++) {
            const Graph& gr = *graphs[g];
            int n = sc.n[g];
            const auto& col = sc.colors[g];
            for (std::size_t t = 0; t < tuples[g]; t++) {
                sig.clear();
                sig.push_back(col[t]);
                if (k == 1) {
                    for (int w : gr.neighbors((int)t)) sig.push_back(col[w]);
                    std::sort(sig.begin() + 1, sig.end());
                } else if (k == 2) {
                    int x = (int)(t / n), y = (int)(t % n);
                    for (int u = 0; u < n; u++)
                        sig.push_back(detail::pack_pair(col[(std::size_t)u * n + y],
                                                        col[(std::size_t)x * n + u]));
                    std::sort(sig.begin() + 1, sig.end());
                } else {
                    std::size_t rest = t;
                    for (int i = k - 1; i >= 0; i--) {
                        tup[i] = (int)(rest % n);
                        rest /= n;
                    }
                    blocks.clear();
                    std::size_t stride = tuples[g] / (std::size_t)n;  // n^(k-1)
                    for (int u = 0; u < n; u++) {
                        block.clear();
                        std::size_t pos_weight = stride;
                        std::size_t base = t;
                        for (int i = 0; i < k; i++) {
                            std::size_t sub = base + ((std::size_t)u - (std::size_t)tup[i]) * pos_weight;
                            block.push_back(col[sub]);
                            pos_weight /= (std::size_t)n;
                        }
                        blocks.push_back(block);
                    }
                    std::sort(blocks.begin(), blocks.end());
                    for (const auto& b : blocks) sig.insert(sig.end(), b.begin(), b.end());
                }
                tmp[g][t] = (std::uint32_t)dict.intern(sig);
            }
        }

        std::size_t distinct = dict.distinct();
        if (distinct < classes) throw std::logic_error("wl_refine: partition coarsened");
        if (distinct == classes) {
            sc.rounds_used = round;
            break;
        }
        if ((std::size_t)round > total)
            throw std::logic_error("wl_refine: stabilization bound exceeded");
        auto rank = dict.lexicographic_ranks();
        for (int g = 0; g < sc.graph_count; g++)
            for (std::size_t t = 0; t < tuples[g]; t++) sc.colors[g][t] = rank[tmp[g][t]];
        classes = distinct;
    }

    for (int g = 0; g < sc.graph_count; g++)
        for (std::uint32_t c : sc.colors[g]) sc.palettes[g][c]++;
    return sc;
}

inline StableColoring wl_refine(const Graph& G, int k, WlOptions opts = {}) {
    return wl_refine(G, nullptr, k, opts);
}

// True iff the multisets of stable WL-k colors agree (over the shared
// dictionary of a joint run). Graphs of different orders are never
// equivalent.
inline bool wl_equivalent(const Graph& G, const Graph& H, int k, WlOptions opts = {}) {
    if (G.vertex_count() != H.vertex_count()) return false;
    return wl_refine(G, &H, k, opts).palettes_equal();
}

struct VertexPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

// Coarsest equitable partition refining the input vertex coloring; the
// color classes of the stable WL-1 coloring. Blocks are ordered by color.
inline VertexPartition equitable_partition(const Graph& G) {
    auto sc = wl_refine(G, nullptr, 1);
    VertexPartition p;
    p.n = G.vertex_count();
    std::map<std::uint32_t, std::vector<int>> by_color;
    for (int v = 0; v < G.vertex_count(); v++) by_color[sc.colors[0][v]].push_back(v);
    for (auto& [c, block] : by_color) p.blocks.push_back(std::move(block));
    return p;
}

// Uniform neighbor counts between any two blocks, and constant original
// vertex color within each block.
inline bool is_equitable(const Graph& G, const VertexPartition& p) {
    int n = G.vertex_count();
    if (p.n != n) throw std::invalid_argument("is_equitable: partition over wrong vertex set");
    std::vector<int> block_of(n, -1);
    for (size_t b = 0; b < p.blocks.size(); b++) {
        if (p.blocks[b].empty()) throw std::invalid_argument("is_equitable: empty block");
        for (int v : p.blocks[b]) {
            if (v < 0 || v >= n || block_of[v] != -1)
                throw std::invalid_argument("is_equitable: not a partition");
            block_of[v] = (int)b;
        }
    }
    for (int v = 0; v < n; v++)
        if (block_of[v] == -1) throw std::invalid_argument("is_equitable: not a partition");

    int nb = (int)p.blocks.size();
    for (int b = 0; b < nb; b++) {
        if (G.colored()) {
            int c0 = G.color(p.blocks[b][0]);
            for (int v : p.blocks[b])
                if (G.color(v) != c0) return false;
        }
        std::vector<long long> expected(nb, -1);
        for (int v : p.blocks[b]) {
            std::vector<long long> cnt(nb, 0);
            for (int w : G.neighbors(v)) cnt[block_of[w]]++;
            if (expected[0] == -1)
                expected = cnt;
            else if (cnt != expected)
                return false;
        }
    }
    return true;
}

// Unordered pair of stable colors of the ordered pairs (x,y) and (y,x).
// For k > 2 pairs are padded to k-tuples (x,y,...,y); for k = 1 the pair
// color is the packed pair of endpoint colors.
inline std::pair<std::uint64_t, std::uint64_t> edge_color(const StableColoring& sc, int g,
                                                          int x, int y) {
    std::uint64_t a, b;
    if (sc.k == 1) {
        a = detail::pack_pair(sc.colors[g][x], sc.colors[g][y]);
        b = detail::pack_pair(sc.colors[g][y], sc.colors[g][x]);
    } else {
        std::vector<int> xy(sc.k, y), yx(sc.k, x);
        xy[0] = x;
        yx[0] = y;
        a = sc.tuple_color(g, xy);
        b = sc.tuple_color(g, yx);
    }
    if (a > b) std::swap(a, b);
    return {a, b};
}

inline std::pair<std::uint64_t, std::uint64_t> wl2_edge_color(const Graph& G, int x, int y,
                                                              int k = 2, WlOptions opts = {}) {
    if (!G.has_edge(x, y)) throw std::invalid_argument("wl2_edge_color: not an edge");
    if (k < 2) throw std::invalid_argument("wl2_edge_color: need k >= 2");
    auto sc = wl_refine(G, nullptr, k, opts);
    return edge_color(sc, 0, x, y);
}

}  // namespace wlpack
