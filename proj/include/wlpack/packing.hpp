#pragma once

// Fractional and integral packing / covering parameters of graphs, all
// routed through set systems: matching and vertex cover, domination,
// F-packing in vertex- and edge-disjoint mode, and the k-extension
// property.

#include <wlpack/bnb.hpp>
#include <wlpack/subgraph.hpp>

namespace wlpack {

// Fractional domination: fractional hitting of the closed neighborhoods.
inline Rational frac_domination(const Graph& g, SolverOptions opts = {}) {
    return frac_hitting(closed_neighborhood_system(g), opts);
}

// Fractional F-packing value: fractional matching of the packing system.
inline Rational frac_packing(const Graph& f, const Graph& g, PackMode mode,
                             SubgraphEnumOptions eopts = {}, SolverOptions sopts = {}) {
    return frac_matching(packing_system(f, g, mode, eopts), sopts);
}

// nu(G): maximum matching, as integral packing of the edge system.
inline long long matching_number(const Graph& g, BnbOptions opts = {}) {
    return integral_packing(edge_set_system(g), opts).value;
}

// tau(G): minimum vertex cover, as integral hitting of the edge system.
inline long long vertex_cover_number(const Graph& g, BnbOptions opts = {}) {
    if (g.edge_count() == 0) return 0;
    return integral_hitting(edge_set_system(g), opts).value;
}

// gamma(G): minimum dominating set.
inline long long domination_number(const Graph& g, BnbOptions opts = {}) {
    if (g.vertex_count() == 0) return 0;
    return integral_hitting(closed_neighborhood_system(g), opts).value;
}

// Integral F-packing number (pi^F for vertex mode, rho^F for edge mode).
inline long long packing_number(const Graph& f, const Graph& g, PackMode mode,
                                SubgraphEnumOptions eopts = {}, BnbOptions opts = {}) {
    return integral_packing(packing_system(f, g, mode, eopts), opts).value;
}

struct PackingResult {
    Rational fractional_value;
    std::optional<long long> integral_value;
    std::optional<std::vector<int>> witness;  // selected set indices
    std::string system_label;
};

inline PackingResult packing_report(const Graph& f, const Graph& g, PackMode mode,
                                    bool integral, const std::string& label,
                                    SubgraphEnumOptions eopts = {}, BnbOptions opts = {}) {
    auto sys = packing_system(f, g, mode, eopts);
    PackingResult r;
    r.system_label = label;
    r.fractional_value = frac_matching(sys, opts.lp);
    if (integral) {
        auto b = integral_packing(sys, opts);
        r.integral_value = b.value;
        r.witness = b.witness;
    }
    return r;
}

// True iff for all disjoint X, Y with |X u Y| <= k some vertex outside
// X u Y is adjacent to every x in X and to no y in Y. Implies that the
// domination number exceeds k.
inline bool k_extension(const Graph& g, int k, int cap = 3) {
    if (k < 0) throw std::invalid_argument("k_extension: negative k");
    if (k > cap) throw resource_limit_error("k_extension: k exceeds configured cap");
    const int n = g.vertex_count();

    std::vector<int> subset;

    // Is there a z outside the subset adjacent to exactly the members
    // selected by x_mask and to none of the others?
    auto extender_exists = [&](unsigned x_mask) {
        for (int z = 0; z < n; z++) {
            if (std::find(subset.begin(), subset.end(), z) != subset.end()) continue;
            bool ok = true;
            for (size_t i = 0; i < subset.size() && ok; i++) {
                bool want = (x_mask >> i) & 1u;
                if (g.has_edge(z, subset[i]) != want) ok = false;
            }
            if (ok) return true;
        }
        return false;
    };

    auto rec = [&](auto&& self, int from, int size_left) -> bool {
        for (unsigned split = 0; split < (1u << subset.size()); split++)
            if (!extender_exists(split)) return false;
        if (size_left == 0) return true;
        for (int v = from; v < n; v++) {
            subset.push_back(v);
            bool ok = self(self, v + 1, size_left - 1);
            subset.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0, k);
}

}  // namespace wlpack
