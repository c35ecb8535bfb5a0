#pragma once

// Enumeration of (not necessarily induced) subgraphs of G isomorphic to a
// small pattern F, with each subgraph emitted exactly once: a candidate
// embedding is kept only if it is the lexicographically smallest among
// its compositions with Aut(F). Packing systems, color types and
// per-vertex / per-edge subgraph counts build on the enumeration.

#include <wlpack/graph.hpp>
#include <wlpack/set_system.hpp>
#include <wlpack/wl.hpp>

#include <cstdint>

namespace wlpack {

struct SubgraphEnumOptions {
    int max_pattern_vertices = 6;
};

struct Subgraph {
    std::vector<int> vertices;  // sorted
    std::vector<Edge> edges;    // sorted, endpoints sorted
};

// All vertex permutations of F mapping edges onto edges, brute force.
inline std::vector<std::vector<int>> automorphisms(const Graph& f) {
    const int l = f.vertex_count();
    if (l > 8) throw resource_limit_error("automorphisms: pattern too large");
    std::vector<int> perm(l);
    for (int i = 0; i < l; i++) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& [u, v] : f.edges())
            if (!f.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace detail {

struct EmbedPlan {
    std::vector<int> order;                   // pattern vertices in placement order
    std::vector<std::vector<int>> back_adj;   // placed pattern neighbors per position
};

inline EmbedPlan make_embed_plan(const Graph& f) {
    const int l = f.vertex_count();
    EmbedPlan plan;
    std::vector<char> placed(l, 0);
    for (int step = 0; step < l; step++) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < l; v++) {
            if (placed[v]) continue;
            int links = 0;
            for (int w : f.neighbors(v))
                if (placed[w]) links++;
            if (links > best_links || (links == best_links && f.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = f.degree(v);
            }
        }
        placed[best] = 1;
        std::vector<int> back;
        for (int w : f.neighbors(best))
            if (std::find(plan.order.begin(), plan.order.end(), w) != plan.order.end())
                back.push_back(w);
        plan.order.push_back(best);
        plan.back_adj.push_back(std::move(back));
    }
    return plan;
}

}  // namespace detail

// Every subgraph of G isomorphic to F, listed once.
inline std::vector<Subgraph> enumerate_subgraphs(const Graph& f, const Graph& g,
                                                 SubgraphEnumOptions opts = {}) {
    const int l = f.vertex_count();
    if (l > opts.max_pattern_vertices)
        throw resource_limit_error("enumerate_subgraphs: pattern exceeds vertex cap");
    if (l == 0) return {};

    const auto auts = automorphisms(f);
    const auto plan = detail::make_embed_plan(f);
    const int n = g.vertex_count();

    std::vector<Subgraph> out;
    std::vector<int> image(l, -1);
    std::vector<char> used(n, 0);

    auto emit = [&]() {
        // canonical representative under Aut(F)
        for (const auto& a : auts) {
            for (int v = 0; v < l; v++) {
                int lhs = image[a[v]], rhs = image[v];
                if (lhs < rhs) return;  // a smaller equivalent embedding exists
                if (lhs > rhs) break;
            }
        }
        Subgraph s;
        s.vertices = image;
        std::sort(s.vertices.begin(), s.vertices.end());
        for (const auto& [u, v] : f.edges()) {
            int a = image[u], b = image[v];
            s.edges.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(s.edges.begin(), s.edges.end());
        out.push_back(std::move(s));
    };

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == l) {
            emit();
            return;
        }
        int fv = plan.order[pos];
        const auto& back = plan.back_adj[pos];
        auto try_vertex = [&](int gv) {
            if (used[gv] || g.degree(gv) < f.degree(fv)) return;
            for (int fw : back)
                if (!g.has_edge(gv, image[fw])) return;
            image[fv] = gv;
            used[gv] = 1;
            self(self, pos + 1);
            used[gv] = 0;
            image[fv] = -1;
        };
        if (back.empty()) {
            for (int gv = 0; gv < n; gv++) try_vertex(gv);
        } else {
            for (int gv : g.neighbors(image[back[0]])) try_vertex(gv);
        }
    };
    rec(rec, 0);
    return out;
}

enum class PackMode { vertex, edge };

// Hypergraph of the F-copies in G: vertex sets over ground V(G), or edge
// index sets over ground E(G). Copies sharing the same set collapse to
// one hyperedge.
inline SetSystem packing_system(const Graph& f, const Graph& g, PackMode mode,
                                SubgraphEnumOptions opts = {}) {
    auto subs = enumerate_subgraphs(f, g, opts);
    std::vector<std::vector<int>> sets;
    for (const auto& s : subs) {
        if (mode == PackMode::vertex) {
            sets.push_back(s.vertices);
        } else {
            std::vector<int> idx;
            for (const auto& [u, v] : s.edges) idx.push_back(g.edge_index(u, v));
            sets.push_back(std::move(idx));
        }
    }
    return make_set_system(mode == PackMode::vertex ? g.vertex_count() : g.edge_count(),
                           std::move(sets));
}

inline SetSystem vertex_packing_system(const Graph& f, const Graph& g,
                                       SubgraphEnumOptions opts = {}) {
    return packing_system(f, g, PackMode::vertex, opts);
}

inline SetSystem edge_packing_system(const Graph& f, const Graph& g,
                                     SubgraphEnumOptions opts = {}) {
    return packing_system(f, g, PackMode::edge, opts);
}

// Multiset of ground colors of one F-copy: vertex colors in vertex mode,
// unordered pair colors of the edges in edge mode.
using EdgeColor = std::pair<std::uint64_t, std::uint64_t>;

struct ColorType {
    PackMode mode = PackMode::vertex;
    std::vector<std::uint64_t> vertex_items;  // sorted
    std::vector<EdgeColor> edge_items;        // sorted

    friend bool operator==(const ColorType& a, const ColorType& b) {
        return a.mode == b.mode && a.vertex_items == b.vertex_items &&
               a.edge_items == b.edge_items;
    }
    friend bool operator<(const ColorType& a, const ColorType& b) {
        if (a.mode != b.mode) return a.mode < b.mode;
        if (a.vertex_items != b.vertex_items) return a.vertex_items < b.vertex_items;
        return a.edge_items < b.edge_items;
    }
};

inline ColorType vertex_color_type(const Subgraph& s, const std::vector<std::uint64_t>& vcolor) {
    ColorType t;
    t.mode = PackMode::vertex;
    for (int v : s.vertices) t.vertex_items.push_back(vcolor[v]);
    std::sort(t.vertex_items.begin(), t.vertex_items.end());
    return t;
}

inline ColorType edge_color_type(const Subgraph& s, const Graph& g,
                                 const std::vector<EdgeColor>& ecolor) {
    ColorType t;
    t.mode = PackMode::edge;
    for (const auto& [u, v] : s.edges) t.edge_items.push_back(ecolor[g.edge_index(u, v)]);
    std::sort(t.edge_items.begin(), t.edge_items.end());
    return t;
}

// Stable pair colors for every edge of g, from a (possibly joint) stable
// coloring.
inline std::vector<EdgeColor> stable_edge_colors(const StableColoring& sc, int graph_index,
                                                 const Graph& g) {
    std::vector<EdgeColor> out;
    for (const auto& [u, v] : g.edges()) out.push_back(edge_color(sc, graph_index, u, v));
    return out;
}

// Number of F-copies with color type mu containing vertex x.
inline long long count_subgraphs_at(const Graph& f, const Graph& g,
                                    const std::vector<std::uint64_t>& vcolor, int x,
                                    const ColorType& mu, SubgraphEnumOptions opts = {}) {
    long long count = 0;
    for (const auto& s : enumerate_subgraphs(f, g, opts))
        if (std::binary_search(s.vertices.begin(), s.vertices.end(), x) &&
            vertex_color_type(s, vcolor) == mu)
            count++;
    return count;
}

// Number of F-copies with edge color type mu containing the edge e.
inline long long count_subgraphs_at_edge(const Graph& f, const Graph& g,
                                         const std::vector<EdgeColor>& ecolor, Edge e,
                                         const ColorType& mu, SubgraphEnumOptions opts = {}) {
    if (e.first > e.second) std::swap(e.first, e.second);
    long long count = 0;
    for (const auto& s : enumerate_subgraphs(f, g, opts))
        if (std::binary_search(s.edges.begin(), s.edges.end(), e) &&
            edge_color_type(s, g, ecolor) == mu)
            count++;
    return count;
}

// Extends a stable ground coloring to an equitable partition of the
// incidence graph of the packing system: ground classes stay as they
// are, and the set side gets one block per realized color type. Requires
// the per-class subgraph counts to be uniform, which holds when the
// ground coloring is WL-stable for sufficient dimension.
inline VertexPartition extend_equitable_partition(const Graph& f, const Graph& g, PackMode mode,
                                                  const std::vector<std::uint64_t>& vcolor,
                                                  const std::vector<EdgeColor>& ecolor,
                                                  SubgraphEnumOptions opts = {}) {
    auto subs = enumerate_subgraphs(f, g, opts);
    auto sys = packing_system(f, g, mode, opts);
    const int ground = sys.ground_size;

    // color type per subgraph, and per deduplicated hyperedge
    std::vector<ColorType> types;
    std::vector<std::vector<int>> ground_sets;
    for (const auto& s : subs) {
        types.push_back(mode == PackMode::vertex ? vertex_color_type(s, vcolor)
                                                 : edge_color_type(s, g, ecolor));
        if (mode == PackMode::vertex) {
            ground_sets.push_back(s.vertices);
        } else {
            std::vector<int> idx;
            for (const auto& [u, v] : s.edges) idx.push_back(g.edge_index(u, v));
            std::sort(idx.begin(), idx.end());
            ground_sets.push_back(std::move(idx));
        }
    }

    // ground classes from the coloring
    std::map<std::uint64_t, std::vector<int>> ground_classes;
    if (mode == PackMode::vertex) {
        for (int v = 0; v < ground; v++) ground_classes[vcolor[v]].push_back(v);
    } else {
        std::map<EdgeColor, std::vector<int>> by_pair;
        for (int e = 0; e < ground; e++) by_pair[ecolor[e]].push_back(e);
        std::uint64_t next = 0;
        for (auto& [c, members] : by_pair) ground_classes[next++] = members;
    }

    // realized color types, ordered
    std::vector<ColorType> distinct = types;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto type_index = [&](const ColorType& t) {
        return (int)(std::lower_bound(distinct.begin(), distinct.end(), t) - distinct.begin());
    };

    // uniformity of subgraph counts within every ground class
    std::vector<std::vector<long long>> counts((size_t)ground,
                                               std::vector<long long>(distinct.size(), 0));
    for (size_t i = 0; i < subs.size(); i++) {
        int ti = type_index(types[i]);
        for (int x : ground_sets[i]) counts[x][ti]++;
    }
    for (const auto& [c, members] : ground_classes) {
        for (int x : members)
            if (counts[x] != counts[members[0]])
                throw std::invalid_argument(
                    "extend_equitable_partition: counts not uniform per color class; "
                    "ground coloring is not stable for sufficient dimension");
    }

    // set-side blocks per type, via the deduplicated system's indexing
    std::vector<int> set_type((size_t)sys.sets.size(), -1);
    for (size_t i = 0; i < subs.size(); i++) {
        auto it = std::lower_bound(sys.sets.begin(), sys.sets.end(), ground_sets[i]);
        int si = (int)(it - sys.sets.begin());
        int ti = type_index(types[i]);
        if (set_type[si] != -1 && set_type[si] != ti)
            throw std::logic_error("extend_equitable_partition: ambiguous hyperedge type");
        set_type[si] = ti;
    }

    VertexPartition p;
    p.n = ground + (int)sys.sets.size();
    for (const auto& [c, members] : ground_classes) p.blocks.push_back(members);
    std::vector<std::vector<int>> set_blocks(distinct.size());
    for (size_t s = 0; s < sys.sets.size(); s++) set_blocks[set_type[s]].push_back(ground + (int)s);
    for (auto& b : set_blocks)
        if (!b.empty()) p.blocks.push_back(std::move(b));
    return p;
}

}  // namespace wlpack
