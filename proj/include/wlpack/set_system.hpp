#pragma once

// Set systems (hypergraphs) over ground set 0..m-1, their incidence
// graphs, and the exact fractional matching / hitting values via LP.

#include <wlpack/graph.hpp>
#include <wlpack/lp.hpp>

namespace wlpack {

struct SetSystem {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;  // each sorted; duplicates collapsed
};

inline SetSystem make_set_system(int ground_size, std::vector<std::vector<int>> sets) {
    if (ground_size < 0) throw std::invalid_argument("set_system: negative ground size");
    for (auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("set_system: empty set");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int x : s)
            if (x < 0 || x >= ground_size)
                throw std::invalid_argument("set_system: element out of range");
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return {ground_size, std::move(sets)};
}

// Vertex-colored bipartite incidence graph: ground vertices 0..m-1 are
// red (color 0), set vertices m..m+n-1 are blue (color 1); ground j is
// adjacent to set i iff j is in S_i.
inline Graph incidence_graph(const SetSystem& s) {
    const int m = s.ground_size, n = (int)s.sets.size();
    std::vector<Edge> e;
    for (int i = 0; i < n; i++)
        for (int j : s.sets[i]) e.push_back({j, m + i});
    std::vector<int> colors(m + n, 0);
    for (int i = 0; i < n; i++) colors[m + i] = 1;
    return Graph(m + n, std::move(e), std::move(colors));
}

// max 1^t x subject to: for every ground element j, the sets containing j
// carry total weight at most 1.
inline RationalLP matching_lp(const SetSystem& s) {
    RationalLP lp;
    lp.opt = Opt::max;
    lp.objective.assign(s.sets.size(), Rational(1));
    std::vector<std::vector<LpEntry>> rows(s.ground_size);
    for (int i = 0; i < (int)s.sets.size(); i++)
        for (int j : s.sets[i]) rows[j].push_back({i, Rational(1)});
    for (auto& r : rows) {
        lp.rows.push_back(std::move(r));
        lp.rhs.push_back(1);
    }
    return lp;
}

// min 1^t y subject to every set being covered with total weight at least
// 1, in canonical <=-form. This is exactly dual(matching_lp(s)).
inline RationalLP hitting_lp(const SetSystem& s) { return dual(matching_lp(s)); }

inline Rational frac_matching(const SetSystem& s, SolverOptions opts = {}) {
    auto sol = solve(matching_lp(s), opts);
    if (sol.status != SolveStatus::optimal) throw std::logic_error("frac_matching: LP not optimal");
    return sol.value;
}

inline Rational frac_hitting(const SetSystem& s, SolverOptions opts = {}) {
    auto sol = solve(hitting_lp(s), opts);
    if (sol.status != SolveStatus::optimal) throw std::logic_error("frac_hitting: LP not optimal");
    return sol.value;
}

// Ground set = V(G); one set N[v] per vertex.
inline SetSystem closed_neighborhood_system(const Graph& g) {
    std::vector<std::vector<int>> sets;
    for (int v = 0; v < g.vertex_count(); v++) {
        std::vector<int> s = g.neighbors(v);
        s.push_back(v);
        sets.push_back(std::move(s));
    }
    return make_set_system(g.vertex_count(), std::move(sets));
}

// Edges of G as 2-element subsets of V(G).
inline SetSystem edge_set_system(const Graph& g) {
    std::vector<std::vector<int>> sets;
    for (const auto& [u, v] : g.edges()) sets.push_back({u, v});
    return make_set_system(g.vertex_count(), std::move(sets));
}

// The 7-point, 7-line projective plane as a 3-uniform system.
inline SetSystem fano_plane() {
    return make_set_system(7, {{0, 1, 2},
                               {0, 3, 4},
                               {0, 5, 6},
                               {1, 3, 5},
                               {1, 4, 6},
                               {2, 3, 6},
                               {2, 4, 5}});
}

namespace detail {

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(int bits) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); i++) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    int union_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); i++) c += __builtin_popcountll(w[i] | o.w[i]);
        return c;
    }
    void or_with(const Bitset& o) {
        for (size_t i = 0; i < w.size(); i++) w[i] |= o.w[i];
    }
};

// 7 triples pairwise intersecting in exactly one point with a 7-point
// union form a (7,3,1)-design, which is the Fano plane: the 7 lines cover
// 21 distinct pairs, i.e. all pairs of the 7 points.
inline bool fano_search(const std::vector<Bitset>& sets, std::vector<int>& chosen,
                        const Bitset& uni, int next) {
    if (chosen.size() == 7) return true;
    for (int i = next; i < (int)sets.size(); i++) {
        bool ok = true;
        for (int c : chosen)
            if (sets[c].intersection_count(sets[i]) != 1) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (uni.union_count(sets[i]) > 7) continue;
        Bitset uni2 = uni;
        uni2.or_with(sets[i]);
        chosen.push_back(i);
        if (fano_search(sets, chosen, uni2, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// True iff no 7 sets of the 3-uniform system s form a copy of the Fano
// plane.
inline bool fano_free(const SetSystem& s) {
    for (const auto& set : s.sets)
        if (set.size() != 3) throw std::invalid_argument("fano_free: system is not 3-uniform");
    if (s.sets.size() < 7) return true;
    std::vector<detail::Bitset> bits;
    for (const auto& set : s.sets) {
        detail::Bitset b(s.ground_size);
        for (int x : set) b.set(x);
        bits.push_back(std::move(b));
    }
    std::vector<int> chosen;
    detail::Bitset uni(s.ground_size);
    return !detail::fano_search(bits, chosen, uni, 0);
}

}  // namespace wlpack
