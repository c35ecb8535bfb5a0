// Command-line interface: graph generation, WL equivalence testing,
// exact LP solving, packing values, and the experiment harness.

#include <wlpack/experiments.hpp>

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace wlpack;

Graph make_named_graph(const std::string& family, const std::vector<long long>& p) {
    auto need = [&](size_t k) {
        if (p.size() != k)
            throw CLI::ValidationError(family + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "cycle") return need(1), make_cycle((int)p[0]);
    if (family == "path") return need(1), make_path((int)p[0]);
    if (family == "complete") return need(1), make_complete((int)p[0]);
    if (family == "complete-bipartite") return need(2), make_complete_bipartite((int)p[0], (int)p[1]);
    if (family == "star") return need(1), make_star((int)p[0]);
    if (family == "paley") return need(1), make_paley((int)p[0]);
    if (family == "shrikhande") return need(0), make_shrikhande();
    if (family == "rook4") return need(0), make_rook4();
    if (family == "matched-cliques") return need(1), make_matched_cliques((int)p[0]);
    if (family == "circulant") {
        if (p.size() < 2) throw CLI::ValidationError("circulant takes n and at least one step");
        std::set<int> conn;
        int n = (int)p[0];
        for (size_t i = 1; i < p.size(); i++) {
            int c = (int)p[i] % n;
            if (c < 0) c += n;
            conn.insert(c);
            conn.insert((n - c) % n);
        }
        return make_circulant(n, conn);
    }
    throw CLI::ValidationError("unknown family: " + family);
}

// K5, P4, C6, K3,3, star4
Graph parse_pattern(const std::string& name) {
    auto num = [](const std::string& s) { return std::stoi(s); };
    if (name.size() > 1 && (name[0] == 'K' || name[0] == 'P' || name[0] == 'C')) {
        auto comma = name.find(',');
        if (comma != std::string::npos && name[0] == 'K')
            return make_complete_bipartite(num(name.substr(1, comma - 1)),
                                           num(name.substr(comma + 1)));
        int n = num(name.substr(1));
        if (name[0] == 'K') return make_complete(n);
        if (name[0] == 'P') return make_path(n);
        return make_cycle(n);
    }
    if (name.rfind("star", 0) == 0) return make_star(num(name.substr(4)));
    throw CLI::ValidationError("unknown pattern: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph invariance laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "emit a named graph as an edge-list file");
    std::string gen_family, gen_out, gen_dot;
    std::vector<long long> gen_params;
    gen->add_option("family", gen_family,
                    "cycle|path|complete|complete-bipartite|star|circulant|paley|shrikhande|"
                    "rook4|matched-cliques")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--dot", gen_dot, "also write a DOT rendering to this file");

    // --- wl ---
    auto* wl = app.add_subcommand("wl", "test WL-k equivalence of two graph files");
    std::string wl_g, wl_h;
    int wl_k = 1;
    wl->add_option("G", wl_g, "first graph file")->required();
    wl->add_option("H", wl_h, "second graph file")->required();
    wl->add_option("-k,--dimension", wl_k, "WL dimension (default 1)");

    // --- lp ---
    auto* lp = app.add_subcommand("lp", "solve an LP file exactly");
    std::string lp_file;
    lp->add_option("file", lp_file, "LP in text format")->required();

    // --- pack ---
    auto* pack = app.add_subcommand("pack", "fractional / integral packing values");
    std::string pack_pattern, pack_pattern_file, pack_host, pack_mode = "vertex";
    bool pack_integral = false;
    pack->add_option("--pattern", pack_pattern, "named pattern, e.g. K3, P3, C5, K3,3");
    pack->add_option("--pattern-file", pack_pattern_file, "pattern graph file");
    pack->add_option("--host", pack_host, "host graph file")->required();
    pack->add_option("--mode", pack_mode, "vertex|edge (default vertex)");
    pack->add_flag("--integral", pack_integral, "also compute the exact integral value");

    // --- exp ---
    auto* exp = app.add_subcommand("exp", "run reproduction experiments");
    std::string exp_what = "all", exp_out;
    std::uint64_t exp_seed = 0;
    bool exp_list = false;
    auto* exp_run = exp->add_subcommand("run", "run one experiment or all");
    exp_run->add_option("id", exp_what, "experiment id or 'all'");
    exp_run->add_option("--out", exp_out, "report output directory");
    exp_run->add_option("--seed", exp_seed, "override the configured seed");
    exp->add_subcommand("list", "list experiment ids")->callback([&] { exp_list = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = make_named_graph(gen_family, gen_params);
            std::string text = serialize_graph(g);
            if (gen_out.empty())
                std::cout << text;
            else
                write_file(gen_out, text);
            if (!gen_dot.empty()) write_file(gen_dot, to_dot(g));
            return 0;
        }

        if (*wl) {
            Graph g = read_graph_file(wl_g), h = read_graph_file(wl_h);
            auto sc = wl_refine(g, &h, wl_k);
            bool eq = g.vertex_count() == h.vertex_count() && sc.palettes_equal();
            std::cout << (eq ? "EQUIVALENT" : "DISTINGUISHED") << " rounds_used=" << sc.rounds_used
                      << " palette_sizes=" << sc.palettes[0].size() << "/" << sc.palettes[1].size()
                      << "\n";
            return eq ? 0 : 1;
        }

        if (*lp) {
            std::ifstream in(lp_file);
            if (!in) throw std::runtime_error("cannot open LP file: " + lp_file);
            std::ostringstream buf;
            buf << in.rdbuf();
            auto sol = solve(parse_lp_text(buf.str()));
            if (sol.status == SolveStatus::infeasible)
                std::cout << "infeasible\n";
            else if (sol.status == SolveStatus::unbounded)
                std::cout << "unbounded\n";
            else
                std::cout << to_string(sol.value) << "\n";
            return 0;
        }

        if (*pack) {
            if (pack_pattern.empty() == pack_pattern_file.empty())
                throw std::runtime_error("pack: give exactly one of --pattern / --pattern-file");
            Graph f = pack_pattern.empty() ? read_graph_file(pack_pattern_file)
                                           : parse_pattern(pack_pattern);
            Graph g = read_graph_file(pack_host);
            PackMode mode;
            if (pack_mode == "vertex")
                mode = PackMode::vertex;
            else if (pack_mode == "edge")
                mode = PackMode::edge;
            else
                throw std::runtime_error("pack: mode must be vertex or edge");
            auto rep = packing_report(f, g, mode, pack_integral,
                                      pack_pattern.empty() ? pack_pattern_file : pack_pattern);
            json out;
            out["value_num"] = num(rep.fractional_value).str();
            out["value_den"] = den(rep.fractional_value).str();
            if (rep.integral_value) out["integral_value"] = *rep.integral_value;
            if (rep.witness) out["witness"] = *rep.witness;
            out["system"] = rep.system_label;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*exp) {
            if (exp_list) {
                for (const auto& id : experiment_ids()) std::cout << id << "\n";
                return 0;
            }
            HarnessConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            if (!exp_out.empty()) cfg.out_dir = exp_out;
            if (exp_seed != 0) cfg.seed = exp_seed;
            if (exp_what != "all") cfg.selection = std::vector<std::string>{exp_what};
            auto summary = run_all(cfg);
            for (const auto& rep : summary.reports)
                std::cout << (rep.skipped ? "SKIP" : rep.passed ? "PASS" : "FAIL") << " "
                          << rep.experiment_id << " (" << rep.runtime_ms << " ms)"
                          << (rep.skipped ? "  [" + rep.skip_reason + "]" : "") << "\n";
            std::cout << summary.passed << "/" << summary.total << " passed, " << summary.skipped
                      << " skipped; reports in " << cfg.out_dir << "\n";
            return summary.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
