#pragma once

// Experiment catalog: every headline quantity of the project is
// reproduced by a registered experiment that records its inputs,
// computed values, expected values with provenance, and a pass flag.
// Registry entries are data; a new experiment is one registration.
// Expected rationals are serialized exactly as "p/q" strings.

#include <wlpack/fractional_iso.hpp>
#include <wlpack/graph_io.hpp>
#include <wlpack/lp_io.hpp>
#include <wlpack/packing.hpp>
#include <wlpack/treewidth.hpp>
#include <wlpack/triangles.hpp>

#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <random>

namespace wlpack {

using json = nlohmann::json;

struct HarnessConfig {
    std::size_t max_tuples = std::size_t(1) << 26;
    long long bnb_node_budget = 200'000'000;
    int lp_var_cap = 5000;
    // absent: run the full registry; present (possibly empty): run exactly these
    std::optional<std::vector<std::string>> selection;
    std::string out_dir = "reports";
    std::uint64_t seed = 1729;
    bool parallel = false;

    WlOptions wl() const { return {max_tuples}; }
    SolverOptions lp() const {
        SolverOptions o;
        o.max_vars = lp_var_cap;
        return o;
    }
    BnbOptions bnb() const {
        BnbOptions o;
        o.node_budget = bnb_node_budget;
        o.lp = lp();
        return o;
    }
    SubgraphEnumOptions enums() const { return {}; }
};

// key=value lines; '#' comments. Unknown keys are rejected.
inline HarnessConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    HarnessConfig cfg;
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto eq = raw.find('=');
        if (eq == std::string::npos) {
            std::istringstream probe(raw);
            std::string tok;
            if (probe >> tok) throw std::runtime_error("config: expected key=value, got " + raw);
            continue;
        }
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(raw.substr(0, eq)), val = trim(raw.substr(eq + 1));
        if (key == "max_tuples")
            cfg.max_tuples = std::stoull(val);
        else if (key == "bnb_node_budget")
            cfg.bnb_node_budget = std::stoll(val);
        else if (key == "lp_var_cap")
            cfg.lp_var_cap = std::stoi(val);
        else if (key == "out_dir")
            cfg.out_dir = val;
        else if (key == "seed")
            cfg.seed = std::stoull(val);
        else if (key == "parallel")
            cfg.parallel = (val == "1" || val == "true");
        else if (key == "experiments") {
            cfg.selection.emplace();
            std::istringstream list(val);
            std::string id;
            while (std::getline(list, id, ',')) {
                if (!id.empty()) cfg.selection->push_back(id);
            }
        } else
            throw std::runtime_error("config: unknown key " + key);
    }
    return cfg;
}

struct NamedValue {
    std::string name;
    std::string value;
};

struct ExpectedValue {
    std::string name;
    std::string value;
    std::string provenance;  // analytic | exhaustive | definitional
};

struct ExperimentReport {
    std::string experiment_id;
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
    std::vector<NamedValue> computed;
    std::vector<ExpectedValue> expected;
    bool passed = false;
    bool skipped = false;
    std::string skip_reason;
    long long runtime_ms = 0;

    const std::string* find(const std::string& name) const {
        for (const auto& nv : computed)
            if (nv.name == name) return &nv.value;
        return nullptr;
    }

    json to_json() const {
        json j;
        j["experiment_id"] = experiment_id;
        j["seed"] = seed;
        j["inputs"] = inputs;
        j["computed"] = json::array();
        for (const auto& nv : computed) j["computed"].push_back({{"name", nv.name}, {"value", nv.value}});
        j["expected"] = json::array();
        for (const auto& ev : expected)
            j["expected"].push_back(
                {{"name", ev.name}, {"value", ev.value}, {"provenance", ev.provenance}});
        j["passed"] = passed;
        j["skipped"] = skipped;
        j["skip_reason"] = skip_reason;
        j["runtime_ms"] = runtime_ms;
        return j;
    }

    std::string csv_row() const {
        std::string key_values;
        for (const auto& nv : computed) {
            if (!key_values.empty()) key_values += ";";
            key_values += nv.name + "=" + nv.value;
        }
        return experiment_id + "," + (skipped ? "skipped" : passed ? "true" : "false") + "," +
               std::to_string(runtime_ms) + ",\"" + key_values + "\"";
    }
};

namespace expdetail {

inline std::string val(bool b) { return b ? "true" : "false"; }
inline std::string val(long long v) { return std::to_string(v); }
inline std::string val(int v) { return std::to_string(v); }
inline std::string val(const Rational& r) { return to_string(r); }

// Recorder handed to experiment builders.
class Recorder {
  public:
    explicit Recorder(ExperimentReport& rep) : rep_(rep) {}

    void input(const GraphLabel& l) { rep_.inputs.push_back(l.to_string()); }
    void input(const std::string& s) { rep_.inputs.push_back(s); }

    template <class T>
    void computed(const std::string& name, const T& v) {
        rep_.computed.push_back({name, val(v)});
    }

    template <class T>
    void expect(const std::string& name, const T& v, const std::string& provenance) {
        rep_.expected.push_back({name, val(v), provenance});
    }

    // compute-and-expect in one step
    template <class T, class U>
    void check(const std::string& name, const T& got, const U& want,
               const std::string& provenance) {
        computed(name, got);
        expect(name, want, provenance);
    }

  private:
    ExperimentReport& rep_;
};

struct LabeledGraph {
    GraphLabel label;
    Graph graph;
};

inline LabeledGraph lg_cycle(int n) {
    return {{GraphLabel::Family::cycle, {n}}, make_cycle(n)};
}
inline LabeledGraph lg_path(int n) {
    return {{GraphLabel::Family::path, {n}}, make_path(n)};
}
inline LabeledGraph lg_complete(int n) {
    return {{GraphLabel::Family::complete, {n}}, make_complete(n)};
}
inline LabeledGraph lg_kst(int s, int t) {
    return {{GraphLabel::Family::complete_bipartite, {s, t}}, make_complete_bipartite(s, t)};
}
inline LabeledGraph lg_paley(int q) {
    return {{GraphLabel::Family::paley, {q}}, make_paley(q)};
}
// The comparison circulant on Z_q with steps +-1..+-(q-1)/4.
inline LabeledGraph lg_hq(int q) {
    int s = (q - 1) / 4;
    std::set<int> conn;
    for (int c = 1; c <= s; c++) conn.insert(c), conn.insert(q - c);
    return {{GraphLabel::Family::circulant, {q, s}, "steps 1.." + std::to_string(s)},
            make_circulant(q, conn)};
}
inline LabeledGraph lg_shrikhande() {
    return {{GraphLabel::Family::shrikhande, {}}, make_shrikhande()};
}
inline LabeledGraph lg_rook() {
    return {{GraphLabel::Family::rook4, {}}, make_rook4()};
}
inline LabeledGraph lg_mc(int s) {
    return {{GraphLabel::Family::matched_cliques, {s}}, make_matched_cliques(s)};
}
// 2s disjoint triangles.
inline LabeledGraph lg_triangles(int copies) {
    return {{GraphLabel::Family::disjoint_union, {copies, 3}, "triangle copies"},
            scalar_multiple(copies, make_complete(3))};
}
inline LabeledGraph lg_union(const LabeledGraph& a, const LabeledGraph& b) {
    return {{GraphLabel::Family::disjoint_union, {}, a.label.to_string() + "+" + b.label.to_string()},
            disjoint_union(a.graph, b.graph)};
}
inline LabeledGraph lg_tensor(const LabeledGraph& a, const LabeledGraph& b) {
    return {{GraphLabel::Family::tensor_product, {}, a.label.to_string() + "x" + b.label.to_string()},
            tensor_product(a.graph, b.graph)};
}

// Deterministic permutation from the seeded generator.
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    for (int i = n - 1; i > 0; i--) {
        int j = (int)(rng() % (std::uint64_t)(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

inline LabeledGraph lg_permuted(const LabeledGraph& g, std::mt19937_64& rng) {
    return {{g.label.family, g.label.params, g.label.note + " relabeled"},
            permuted(g.graph, random_permutation(g.graph.vertex_count(), rng))};
}

inline long long count_triangles(const Graph& g) {
    long long t = 0;
    for (const auto& [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w > v && g.has_edge(v, w)) t++;
    return t;
}

}  // namespace expdetail

namespace experiments {

using expdetail::LabeledGraph;
using expdetail::Recorder;

// --- individual experiments ------------------------------------------

inline void ratio_shrikhande_rook(Recorder& r, const HarnessConfig& cfg) {
    auto S = expdetail::lg_shrikhande(), R = expdetail::lg_rook();
    r.input(S.label);
    r.input(R.label);
    r.check("wl2_equivalent", wl_equivalent(S.graph, R.graph, 2, cfg.wl()), true, "analytic");
    auto sysS = edge_packing_system(make_complete(3), S.graph, cfg.enums());
    auto sysR = edge_packing_system(make_complete(3), R.graph, cfg.enums());
    r.check("rho_S", integral_packing(sysS, cfg.bnb()).value, 16LL, "analytic");
    r.check("rho_R", integral_packing(sysR, cfg.bnb()).value, 8LL, "analytic");
    r.check("rho_f_S", frac_matching(sysS, cfg.lp()), Rational(16), "analytic");
    r.check("rho_f_R", frac_matching(sysR, cfg.lp()), Rational(16), "analytic");
}

inline void triangle_separation(Recorder& r, const HarnessConfig& cfg) {
    auto H = expdetail::lg_triangles(2), G = expdetail::lg_cycle(6);
    r.input(H.label);
    r.input(G.label);
    r.check("wl1_equivalent", wl_equivalent(H.graph, G.graph, 1, cfg.wl()), true, "analytic");
    r.check("wl2_equivalent", wl_equivalent(H.graph, G.graph, 2, cfg.wl()), false, "analytic");
    r.check("rho_f_2c3", frac_packing(make_complete(3), H.graph, PackMode::edge, cfg.enums(), cfg.lp()),
            Rational(2), "analytic");
    r.check("rho_f_c6", frac_packing(make_complete(3), G.graph, PackMode::edge, cfg.enums(), cfg.lp()),
            Rational(0), "definitional");
}

inline void matching_ratio_cycle(Recorder& r, const HarnessConfig& cfg) {
    for (int s = 1; s <= 3; s++) {
        auto G = expdetail::lg_cycle(6 * s), H = expdetail::lg_triangles(2 * s);
        r.input(G.label);
        r.input(H.label);
        std::string sfx = "_s" + std::to_string(s);
        r.check("wl1_equivalent" + sfx, wl_equivalent(G.graph, H.graph, 1, cfg.wl()), true,
                "analytic");
        Rational nufG = frac_matching(edge_set_system(G.graph), cfg.lp());
        Rational nufH = frac_matching(edge_set_system(H.graph), cfg.lp());
        r.check("nu_f_G" + sfx, nufG, Rational(3 * s), "analytic");
        r.check("nu_f_H" + sfx, nufH, Rational(3 * s), "analytic");
        long long nuG = matching_number(G.graph, cfg.bnb());
        long long nuH = matching_number(H.graph, cfg.bnb());
        r.check("nu_G" + sfx, nuG, (long long)(3 * s), "analytic");
        r.check("nu_H" + sfx, nuH, (long long)(2 * s), "analytic");
        r.check("ratio" + sfx, Rational(nuG) / Rational(nuH), make_rational(3, 2), "analytic");
    }
}

inline void paley_domination(Recorder& r, const HarnessConfig& cfg) {
    for (int q : {13, 17, 29, 37}) {
        auto G = expdetail::lg_paley(q), H = expdetail::lg_hq(q);
        r.input(G.label);
        r.input(H.label);
        std::string sfx = "_q" + std::to_string(q);
        Rational gf = frac_domination(G.graph, cfg.lp());
        r.computed("gamma_f_paley" + sfx, gf);
        r.check("gamma_f_le_2" + sfx, gf <= 2, true, "analytic");
        r.check("gamma_f_exact" + sfx, gf, Rational(2 * q) / Rational(q + 1), "analytic");
        r.check("wl1_equivalent" + sfx, wl_equivalent(G.graph, H.graph, 1, cfg.wl()), true,
                "analytic");
        int s = (q - 1) / 4;
        bool dominating = true;
        {
            std::vector<char> hit(q, 0);
            for (int c : {0, 2 * s}) {
                hit[c] = 1;
                for (int w : H.graph.neighbors(c)) hit[w] = 1;
            }
            for (char h : hit) dominating &= (h == 1);
        }
        r.check("zero_2s_dominating" + sfx, dominating, true, "analytic");
        r.check("gamma_H" + sfx, domination_number(H.graph, cfg.bnb()), 2LL, "analytic");
    }
    auto G37 = make_paley(37);
    r.check("k_extension_2_q37", k_extension(G37, 2), true, "exhaustive");
    long long g37 = domination_number(G37, cfg.bnb());
    r.computed("gamma_paley_q37", g37);
    r.check("gamma_paley_q37_ge_3", g37 >= 3, true, "exhaustive");
}

inline void vertex_cover_cliques(Recorder& r, const HarnessConfig& cfg) {
    for (int s = 3; s <= 5; s++) {
        auto G = expdetail::lg_mc(s), H = expdetail::lg_kst(s, s);
        r.input(G.label);
        r.input(H.label);
        std::string sfx = "_s" + std::to_string(s);
        r.check("wl1_equivalent" + sfx, wl_equivalent(G.graph, H.graph, 1, cfg.wl()), true,
                "analytic");
        r.check("tau_G" + sfx, vertex_cover_number(G.graph, cfg.bnb()), (long long)(2 * s - 2),
                "analytic");
        r.check("tau_H" + sfx, vertex_cover_number(H.graph, cfg.bnb()), (long long)s, "analytic");
        Rational tfG = frac_hitting(edge_set_system(G.graph), cfg.lp());
        Rational tfH = frac_hitting(edge_set_system(H.graph), cfg.lp());
        r.check("tau_f_G" + sfx, tfG, Rational(s), "analytic");
        r.check("tau_f_H" + sfx, tfH, Rational(s), "analytic");
    }
}

inline void htw_invariance(Recorder& r, const HarnessConfig& cfg) {
    r.check("htw_K2", htw(make_complete(2)), 1, "exhaustive");
    r.check("htw_P3", htw(make_path(3)), 1, "exhaustive");
    r.check("htw_K3", htw(make_complete(3)), 2, "exhaustive");
    r.check("htw_K13", htw(make_star(3)), 1, "exhaustive");
    r.check("htw_P4", htw(make_path(4)), 2, "exhaustive");

    // WL1-equivalent pairs: nu_f and the fractional P3-packing value must
    // agree within every pair.
    std::vector<std::pair<LabeledGraph, LabeledGraph>> wl1_pairs;
    for (int s = 1; s <= 3; s++)
        wl1_pairs.push_back({expdetail::lg_cycle(6 * s), expdetail::lg_triangles(2 * s)});
    wl1_pairs.push_back({expdetail::lg_cycle(8),
                         expdetail::lg_union(expdetail::lg_cycle(4), expdetail::lg_cycle(4))});
    wl1_pairs.push_back({expdetail::lg_cycle(10),
                         expdetail::lg_union(expdetail::lg_cycle(5), expdetail::lg_cycle(5))});
    for (int s = 3; s <= 5; s++)
        wl1_pairs.push_back({expdetail::lg_mc(s), expdetail::lg_kst(s, s)});
    wl1_pairs.push_back({expdetail::lg_paley(13), expdetail::lg_hq(13)});
    wl1_pairs.push_back({expdetail::lg_paley(17), expdetail::lg_hq(17)});
    wl1_pairs.push_back({expdetail::lg_shrikhande(), expdetail::lg_rook()});

    const Graph p3 = make_path(3);
    bool all_wl1 = true, all_nu_f = true, all_p3 = true;
    for (const auto& [A, B] : wl1_pairs) {
        r.input(A.label);
        r.input(B.label);
        all_wl1 &= wl_equivalent(A.graph, B.graph, 1, cfg.wl());
        all_nu_f &= frac_matching(edge_set_system(A.graph), cfg.lp()) ==
                    frac_matching(edge_set_system(B.graph), cfg.lp());
        all_p3 &= frac_packing(p3, A.graph, PackMode::vertex, cfg.enums(), cfg.lp()) ==
                  frac_packing(p3, B.graph, PackMode::vertex, cfg.enums(), cfg.lp());
    }
    r.computed("wl1_pair_count", (long long)wl1_pairs.size());
    r.check("wl1_pairs_equivalent", all_wl1, true, "analytic");
    r.check("nu_f_agrees_on_wl1_pairs", all_nu_f, true, "analytic");
    r.check("p3_packing_agrees_on_wl1_pairs", all_p3, true, "analytic");

    // WL2-equivalent pairs: the fractional triangle packing value must
    // agree within every pair.
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<LabeledGraph, LabeledGraph>> wl2_pairs;
    wl2_pairs.push_back({expdetail::lg_shrikhande(), expdetail::lg_rook()});
    for (const auto& base :
         {expdetail::lg_shrikhande(), expdetail::lg_rook(), expdetail::lg_paley(13),
          expdetail::lg_mc(5), expdetail::lg_complete(5), expdetail::lg_triangles(2),
          expdetail::lg_hq(13), expdetail::lg_cycle(12),
          expdetail::lg_tensor(expdetail::lg_complete(3), expdetail::lg_complete(3))})
        wl2_pairs.push_back({base, expdetail::lg_permuted(base, rng)});

    const Graph k3 = make_complete(3);
    bool all_wl2 = true, all_k3 = true, all_rho = true;
    for (const auto& [A, B] : wl2_pairs) {
        r.input(A.label);
        r.input(B.label);
        all_wl2 &= wl_equivalent(A.graph, B.graph, 2, cfg.wl());
        all_k3 &= frac_packing(k3, A.graph, PackMode::vertex, cfg.enums(), cfg.lp()) ==
                  frac_packing(k3, B.graph, PackMode::vertex, cfg.enums(), cfg.lp());
        all_rho &= frac_packing(k3, A.graph, PackMode::edge, cfg.enums(), cfg.lp()) ==
                   frac_packing(k3, B.graph, PackMode::edge, cfg.enums(), cfg.lp());
    }
    r.computed("wl2_pair_count", (long long)wl2_pairs.size());
    r.check("wl2_pairs_equivalent", all_wl2, true, "analytic");
    r.check("k3_packing_agrees_on_wl2_pairs", all_k3, true, "analytic");
    r.check("edge_k3_packing_agrees_on_wl2_pairs", all_rho, true, "analytic");
}

inline void tensor_square_wl2(Recorder& r, const HarnessConfig& cfg) {
    auto S = expdetail::lg_shrikhande(), R = expdetail::lg_rook();
    auto SS = expdetail::lg_tensor(S, S), RR = expdetail::lg_tensor(R, R);
    r.input(SS.label);
    r.input(RR.label);
    r.check("vertices", (long long)SS.graph.vertex_count(), 256LL, "definitional");
    r.check("edges_SS", (long long)SS.graph.edge_count(), 4608LL, "analytic");
    r.check("edges_RR", (long long)RR.graph.edge_count(), 4608LL, "analytic");
    auto sc = wl_refine(SS.graph, &RR.graph, 2, cfg.wl());
    r.computed("rounds_used", (long long)sc.rounds_used);
    r.computed("palette_size_SS", (long long)sc.palettes[0].size());
    r.computed("palette_size_RR", (long long)sc.palettes[1].size());
    r.check("wl2_equivalent_tensor_squares", sc.palettes_equal(), true, "analytic");
}

inline void k3_decomposition(Recorder& r, const HarnessConfig& cfg) {
    auto K33 = expdetail::lg_tensor(expdetail::lg_complete(3), expdetail::lg_complete(3));
    r.input(K33.label);
    auto d1 = k3_decompose(K33.graph);
    r.check("k3xk3_decomposable", d1.has_value(), true, "exhaustive");
    r.check("k3xk3_triangles", (long long)(d1 ? d1->size() : 0), 6LL, "analytic");
    r.check("k3xk3_partition_ok", d1 && is_complete_triangle_decomposition(K33.graph, *d1), true,
            "exhaustive");
    bool unique_ext = true;
    for (const auto& [u, v] : K33.graph.edges()) {
        int ext = 0;
        for (int w = 0; w < K33.graph.vertex_count(); w++)
            if (K33.graph.has_edge(u, w) && K33.graph.has_edge(v, w)) ext++;
        unique_ext &= (ext == 1);
    }
    r.check("k3xk3_unique_edge_extension", unique_ext, true, "exhaustive");

    auto S = expdetail::lg_shrikhande();
    auto SS = expdetail::lg_tensor(S, S);
    r.input(SS.label);
    auto d2 = k3_decompose(SS.graph);
    r.check("ss_decomposable", d2.has_value(), true, "analytic");
    r.check("ss_triangles", (long long)(d2 ? d2->size() : 0), 1536LL, "analytic");
    r.check("ss_partition_ok", d2 && is_complete_triangle_decomposition(SS.graph, *d2), true,
            "exhaustive");
    (void)cfg;
}

inline void odd_degree_accounting(Recorder& r, const HarnessConfig& cfg) {
    auto K4 = expdetail::lg_complete(4);
    r.input(K4.label);
    auto sys = edge_packing_system(make_complete(3), K4.graph, cfg.enums());
    long long rho = integral_packing(sys, cfg.bnb()).value;
    r.check("rho_K4", rho, 1LL, "exhaustive");
    long long uncovered = K4.graph.edge_count() - 3 * rho;
    r.check("uncovered_K4", uncovered, 3LL, "exhaustive");
    r.check("bound_K4", uncovered_edges_lower_bound(K4.graph), 2LL, "analytic");
    r.check("bound_holds_K4", uncovered >= uncovered_edges_lower_bound(K4.graph), true,
            "definitional");

    auto K4t2 = tensor_product(K4.graph, K4.graph);
    auto K4t4 = tensor_product(K4t2, K4t2);
    r.input({GraphLabel::Family::tensor_product, {}, "complete(4) tensor powers 2 and 4"});
    r.check("bound_K4_t2", uncovered_edges_lower_bound(K4t2), 8LL, "analytic");
    r.check("bound_K4_t4", uncovered_edges_lower_bound(K4t4), 128LL, "analytic");

    // rook powers decompose into 8^k copies of the corresponding tensor
    // power of K4, and every triangle stays inside one copy, so
    // uncovered(R^k) >= 8^k * uncovered(K4^k) >= 2^(5k)/2 for k = 1, 2.
    auto R = expdetail::lg_rook();
    auto sysR = edge_packing_system(make_complete(3), R.graph, cfg.enums());
    long long rhoR = integral_packing(sysR, cfg.bnb()).value;
    long long uncovered_R = R.graph.edge_count() - 3 * rhoR;
    r.check("uncovered_R", uncovered_R, 24LL, "exhaustive");
    r.check("chain_k1", uncovered_R >= 8 * uncovered && 8 * uncovered_edges_lower_bound(K4.graph) == (1LL << 5) / 2,
            true, "analytic");
    r.check("chain_k2", 64 * uncovered_edges_lower_bound(K4t2) == (1LL << 10) / 2, true,
            "analytic");
}

inline void fano_freeness(Recorder& r, const HarnessConfig& cfg) {
    auto fano = fano_plane();
    r.input(std::string("fano plane"));
    r.check("fano_plane_fano_free", fano_free(fano), false, "definitional");
    r.check("fano_frac_matching", frac_matching(fano, cfg.lp()), make_rational(7, 3), "exhaustive");
    r.check("fano_small_system", fano_free(make_set_system(7, {{0, 1, 2}, {3, 4, 5}})), true,
            "definitional");

    const Graph k3 = make_complete(3);
    std::vector<LabeledGraph> corpus = {
        expdetail::lg_complete(5),  expdetail::lg_complete(6),  expdetail::lg_mc(4),
        expdetail::lg_mc(5),        expdetail::lg_shrikhande(), expdetail::lg_rook(),
        expdetail::lg_paley(13),    expdetail::lg_paley(17),    expdetail::lg_paley(29),
        expdetail::lg_paley(37),    expdetail::lg_hq(13),       expdetail::lg_hq(17),
        expdetail::lg_hq(29),       expdetail::lg_hq(37),
    };
    bool all_free = true;
    long long checked = 0;
    for (const auto& g : corpus) {
        if (expdetail::count_triangles(g.graph) < 7) continue;
        r.input(g.label);
        checked++;
        all_free &= fano_free(edge_packing_system(k3, g.graph, cfg.enums()));
    }
    r.computed("graphs_checked", checked);
    r.check("triangle_systems_fano_free", all_free, true, "exhaustive");
}

inline void lp_reduction_certificates(Recorder& r, const HarnessConfig& cfg) {
    struct Pair {
        std::string name;
        SetSystem s1, s2;
    };
    std::vector<Pair> pairs;
    pairs.push_back({"edge systems of cycle(6) and 2 triangles",
                     edge_set_system(make_cycle(6)),
                     edge_set_system(scalar_multiple(2, make_complete(3)))});
    pairs.push_back({"edge systems of matched_cliques(3) and complete_bipartite(3,3)",
                     edge_set_system(make_matched_cliques(3)),
                     edge_set_system(make_complete_bipartite(3, 3))});
    pairs.push_back({"closed neighborhood systems of cycle(8) and 2 squares",
                     closed_neighborhood_system(make_cycle(8)),
                     closed_neighborhood_system(scalar_multiple(2, make_cycle(4)))});

    bool all_ok = true;
    int idx = 0;
    for (const auto& p : pairs) {
        idx++;
        r.input(p.name);
        std::string sfx = "_p" + std::to_string(idx);
        Graph ig1 = incidence_graph(p.s1), ig2 = incidence_graph(p.s2);
        bool wl1 = wl_equivalent(ig1, ig2, 1, cfg.wl());
        r.check("incidence_wl1" + sfx, wl1, true, "analytic");

        auto iso = find_fractional_graph_iso(ig1, ig2, cfg.lp());
        r.check("fractional_iso_feasible" + sfx, iso.feasible, true, "analytic");
        if (!iso.feasible) {
            all_ok = false;
            continue;
        }
        const int m = p.s1.ground_size, n = (int)p.s1.sets.size();
        auto [Y, Z] = fractional_matrix_iso_from_graph_iso(iso.X, m, n);
        r.check("blocks_doubly_stochastic" + sfx, Y.doubly_stochastic() && Z.doubly_stochastic(),
                true, "definitional");

        // incidence matrices as RatMatrix
        RatMatrix M(m, n), N(m, n);
        for (int i = 0; i < n; i++)
            for (int j : p.s1.sets[i]) M.at(j, i) = 1;
        for (int i = 0; i < (int)p.s2.sets.size(); i++)
            for (int j : p.s2.sets[i]) N.at(j, i) = 1;
        bool eq3 = (M * Z == Y * N) && (N * Z.transpose() == Y.transpose() * M);
        r.check("matrix_iso_equations" + sfx, eq3, true, "analytic");

        RationalLP l1 = matching_lp(p.s1), l2 = matching_lp(p.s2);
        ReductionCertificate c12{Y, Z}, c21{Y.transpose(), Z.transpose()};
        r.check("reduction_forward" + sfx, check_reduction(l1, l2, c12), true, "analytic");
        r.check("reduction_backward" + sfx, check_reduction(l2, l1, c21), true, "analytic");
        bool equal_vals = verify_equal_values(l1, l2, c12, c21, cfg.lp());
        r.check("equal_values" + sfx, equal_vals, true, "analytic");
        all_ok &= wl1 && eq3 && equal_vals;
    }
    r.check("all_pairs_ok", all_ok, true, "analytic");
}

inline void fractional_iso_cross_validation(Recorder& r, const HarnessConfig& cfg) {
    std::mt19937_64 rng(cfg.seed ^ 0x5bf03635ull);
    std::vector<std::pair<LabeledGraph, LabeledGraph>> pairs;
    auto C = expdetail::lg_cycle;

    // equivalent pairs
    pairs.push_back({C(6), expdetail::lg_triangles(2)});
    pairs.push_back({C(8), expdetail::lg_union(C(4), C(4))});
    pairs.push_back({C(10), expdetail::lg_union(C(5), C(5))});
    pairs.push_back({C(10), expdetail::lg_union(C(4), C(6))});
    pairs.push_back({C(12), expdetail::lg_triangles(4)});
    pairs.push_back({C(12), expdetail::lg_union(C(6), C(6))});
    pairs.push_back({C(12), expdetail::lg_union(C(3), expdetail::lg_union(C(4), C(5)))});
    for (int s = 3; s <= 5; s++)
        pairs.push_back({expdetail::lg_mc(s), expdetail::lg_kst(s, s)});
    pairs.push_back({expdetail::lg_paley(13), expdetail::lg_hq(13)});
    pairs.push_back({expdetail::lg_shrikhande(), expdetail::lg_rook()});
    for (const auto& base : {C(5), expdetail::lg_complete(4), expdetail::lg_path(5),
                             expdetail::lg_mc(3), expdetail::lg_paley(13)})
        pairs.push_back({base, expdetail::lg_permuted(base, rng)});

    // inequivalent pairs
    pairs.push_back({C(6), expdetail::lg_path(6)});
    pairs.push_back({C(4), expdetail::lg_path(4)});
    pairs.push_back({C(5), expdetail::lg_path(5)});
    pairs.push_back({expdetail::lg_complete(4), C(4)});
    pairs.push_back({expdetail::lg_union(expdetail::lg_complete(3), expdetail::lg_complete(1)),
                     expdetail::lg_kst(1, 3)});
    pairs.push_back({expdetail::lg_union(C(4), expdetail::lg_complete(1)), expdetail::lg_path(5)});
    pairs.push_back({expdetail::lg_mc(3), C(6)});
    pairs.push_back({expdetail::lg_kst(3, 3), C(6)});
    pairs.push_back({expdetail::lg_complete(3),
                     expdetail::lg_union(expdetail::lg_path(3), expdetail::lg_complete(1))});
    pairs.push_back({expdetail::lg_union(expdetail::lg_path(4), expdetail::lg_complete(2)),
                     expdetail::lg_path(6)});

    long long equivalent = 0, inequivalent = 0;
    bool coincide = true;
    for (const auto& [A, B] : pairs) {
        r.input(A.label);
        r.input(B.label);
        bool wl1 = wl_equivalent(A.graph, B.graph, 1, cfg.wl());
        bool feas = find_fractional_graph_iso(A.graph, B.graph, cfg.lp()).feasible;
        coincide &= (wl1 == feas);
        (wl1 ? equivalent : inequivalent)++;
    }
    r.computed("pair_count", (long long)pairs.size());
    r.computed("equivalent_pairs", equivalent);
    r.computed("inequivalent_pairs", inequivalent);
    r.check("pair_count_at_least_20", (long long)pairs.size() >= 20, true, "definitional");
    r.check("feasibility_coincides_with_wl1", coincide, true, "analytic");
}

inline void permutation_robustness(Recorder& r, const HarnessConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    bool wl_stable = true, values_stable = true;
    const Graph k3 = make_complete(3);
    for (const auto& base : {expdetail::lg_shrikhande(), expdetail::lg_rook(),
                             expdetail::lg_paley(13), expdetail::lg_mc(4),
                             expdetail::lg_cycle(12)}) {
        auto relabeled = expdetail::lg_permuted(base, rng);
        r.input(base.label);
        for (int k = 1; k <= 2; k++)
            wl_stable &= wl_equivalent(base.graph, relabeled.graph, k, cfg.wl());
        values_stable &= frac_matching(edge_set_system(base.graph), cfg.lp()) ==
                         frac_matching(edge_set_system(relabeled.graph), cfg.lp());
        values_stable &=
            frac_packing(k3, base.graph, PackMode::edge, cfg.enums(), cfg.lp()) ==
            frac_packing(k3, relabeled.graph, PackMode::edge, cfg.enums(), cfg.lp());
    }
    r.check("wl_equivalence_label_invariant", wl_stable, true, "analytic");
    r.check("fractional_values_label_invariant", values_stable, true, "analytic");
}

}  // namespace experiments

using ExperimentFn = std::function<void(expdetail::Recorder&, const HarnessConfig&)>;

inline const std::vector<std::pair<std::string, ExperimentFn>>& experiment_registry() {
    static const std::vector<std::pair<std::string, ExperimentFn>> registry = {
        {"ratio-shrikhande-rook", experiments::ratio_shrikhande_rook},
        {"triangle-separation", experiments::triangle_separation},
        {"matching-ratio-cycle", experiments::matching_ratio_cycle},
        {"paley-domination", experiments::paley_domination},
        {"vertex-cover-cliques", experiments::vertex_cover_cliques},
        {"htw-invariance", experiments::htw_invariance},
        {"tensor-square-wl2", experiments::tensor_square_wl2},
        {"k3-decomposition", experiments::k3_decomposition},
        {"odd-degree-accounting", experiments::odd_degree_accounting},
        {"fano-freeness", experiments::fano_freeness},
        {"lp-reduction-certificates", experiments::lp_reduction_certificates},
        {"fractional-iso-cross-validation", experiments::fractional_iso_cross_validation},
        {"permutation-robustness", experiments::permutation_robustness},
    };
    return registry;
}

inline std::vector<std::string> experiment_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : experiment_registry()) ids.push_back(id);
    return ids;
}

inline ExperimentReport run_experiment(const std::string& id, const HarnessConfig& cfg) {
    const ExperimentFn* fn = nullptr;
    for (const auto& [eid, f] : experiment_registry())
        if (eid == id) fn = &f;
    if (!fn) throw std::invalid_argument("unknown experiment id: " + id);

    ExperimentReport rep;
    rep.experiment_id = id;
    rep.seed = cfg.seed;
    expdetail::Recorder rec(rep);
    auto t0 = std::chrono::steady_clock::now();
    try {
        (*fn)(rec, cfg);
        rep.passed = true;
        for (const auto& ev : rep.expected) {
            const std::string* got = rep.find(ev.name);
            if (!got || *got != ev.value) rep.passed = false;
        }
    } catch (const resource_limit_error& e) {
        rep.skipped = true;
        rep.skip_reason = e.what();
        rep.passed = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

struct Summary {
    int total = 0, passed = 0, failed = 0, skipped = 0;
    std::vector<ExperimentReport> reports;
    bool all_passed() const { return failed == 0; }
};

inline void write_report_files(const Summary& s, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::string csv = "experiment_id,passed,runtime_ms,key_values\n";
    for (const auto& rep : s.reports) {
        std::ofstream j(out_dir + "/" + rep.experiment_id + ".json", std::ios::binary);
        j << rep.to_json().dump(2) << "\n";
        csv += rep.csv_row() + "\n";
    }
    std::ofstream c(out_dir + "/summary.csv", std::ios::binary);
    c << csv;
}

// Experiments are independent and all library operations are pure over
// immutable inputs, so the parallel mode just farms them out; reports are
// collected in registry order and written serially either way.
inline Summary run_all(const HarnessConfig& cfg) {
    Summary s;
    auto ids = cfg.selection ? *cfg.selection : experiment_ids();
    if (cfg.parallel) {
        std::vector<std::future<ExperimentReport>> futures;
        for (const auto& id : ids)
            futures.push_back(
                std::async(std::launch::async, [&cfg, id] { return run_experiment(id, cfg); }));
        for (auto& f : futures) s.reports.push_back(f.get());
    } else {
        for (const auto& id : ids) s.reports.push_back(run_experiment(id, cfg));
    }
    for (const auto& rep : s.reports) {
        s.total++;
        if (rep.skipped)
            s.skipped++;
        else if (rep.passed)
            s.passed++;
        else
            s.failed++;
    }
    write_report_files(s, cfg.out_dir);
    return s;
}

}  // namespace wlpack
