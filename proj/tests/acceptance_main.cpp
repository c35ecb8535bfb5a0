// Acceptance suite: runs every headline criterion end to end through the
// experiment registry and re-asserts the pinned values, printing one
// pass/fail line per criterion. All numeric comparisons are exact; there
// is no tolerance anywhere.

#include <wlpack/experiments.hpp>

#include <iostream>

using namespace wlpack;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::string experiment;
    // pinned (key, value) pairs the report must contain verbatim
    std::vector<std::pair<std::string, std::string>> pins;
};

void run_criterion(const Criterion& c, const HarnessConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        auto rep = run_experiment(c.experiment, cfg);
        if (rep.skipped) {
            ok = false;
            detail = "skipped: " + rep.skip_reason;
        } else if (!rep.passed) {
            ok = false;
            detail = "experiment self-check failed";
            for (const auto& ev : rep.expected) {
                const std::string* got = rep.find(ev.name);
                if (!got || *got != ev.value)
                    detail += "; " + ev.name + " expected " + ev.value + " got " +
                              (got ? *got : std::string("<missing>"));
            }
        }
        for (const auto& [key, want] : c.pins) {
            const std::string* got = rep.find(key);
            if (!got || *got != want) {
                ok = false;
                detail += " pin " + key + " expected " + want + " got " +
                          (got ? *got : std::string("<missing>"));
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (!ok) failures++;
    std::printf("[%s] %-38s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    HarnessConfig cfg;
    cfg.out_dir = "acceptance-reports";

    const std::vector<Criterion> criteria = {
        {"1 shrikhande-rook gap",
         "ratio-shrikhande-rook",
         {{"wl2_equivalent", "true"},
          {"rho_S", "16"},
          {"rho_R", "8"},
          {"rho_f_S", "16"},
          {"rho_f_R", "16"}}},
        {"2 wl1/wl2 separation for triangles",
         "triangle-separation",
         {{"wl1_equivalent", "true"},
          {"wl2_equivalent", "false"},
          {"rho_f_2c3", "2"},
          {"rho_f_c6", "0"}}},
        {"3 matching ratio tightness",
         "matching-ratio-cycle",
         {{"wl1_equivalent_s1", "true"},
          {"nu_f_G_s1", "3"},
          {"nu_f_H_s1", "3"},
          {"ratio_s1", "3/2"},
          {"wl1_equivalent_s2", "true"},
          {"nu_f_G_s2", "6"},
          {"nu_f_H_s2", "6"},
          {"nu_G_s2", "6"},
          {"nu_H_s2", "4"},
          {"ratio_s2", "3/2"},
          {"wl1_equivalent_s3", "true"},
          {"nu_f_G_s3", "9"},
          {"nu_f_H_s3", "9"},
          {"ratio_s3", "3/2"}}},
        {"4 paley domination",
         "paley-domination",
         {{"gamma_f_le_2_q13", "true"},
          {"gamma_f_le_2_q17", "true"},
          {"gamma_f_le_2_q29", "true"},
          {"gamma_f_le_2_q37", "true"},
          {"wl1_equivalent_q13", "true"},
          {"wl1_equivalent_q17", "true"},
          {"wl1_equivalent_q29", "true"},
          {"wl1_equivalent_q37", "true"},
          {"gamma_H_q13", "2"},
          {"gamma_H_q17", "2"},
          {"gamma_H_q29", "2"},
          {"gamma_H_q37", "2"},
          {"k_extension_2_q37", "true"},
          {"gamma_paley_q37_ge_3", "true"}}},
        {"5 vertex-cover pair",
         "vertex-cover-cliques",
         {{"wl1_equivalent_s3", "true"},
          {"tau_G_s3", "4"},
          {"tau_H_s3", "3"},
          {"tau_f_G_s3", "3"},
          {"tau_f_H_s3", "3"},
          {"tau_G_s4", "6"},
          {"tau_H_s4", "4"},
          {"tau_G_s5", "8"},
          {"tau_H_s5", "5"},
          {"tau_f_G_s5", "5"},
          {"tau_f_H_s5", "5"}}},
        {"6 htw classification and invariance",
         "htw-invariance",
         {{"htw_K2", "1"},
          {"htw_P3", "1"},
          {"htw_K3", "2"},
          {"nu_f_agrees_on_wl1_pairs", "true"},
          {"p3_packing_agrees_on_wl1_pairs", "true"},
          {"k3_packing_agrees_on_wl2_pairs", "true"}}},
        {"7 tensor squares stay wl2-equivalent",
         "tensor-square-wl2",
         {{"vertices", "256"}, {"wl2_equivalent_tensor_squares", "true"}}},
        {"8 triangle decompositions of tensor products",
         "k3-decomposition",
         {{"k3xk3_triangles", "6"},
          {"k3xk3_partition_ok", "true"},
          {"k3xk3_unique_edge_extension", "true"},
          {"ss_triangles", "1536"},
          {"ss_partition_ok", "true"}}},
        {"9 uncovered-edge accounting",
         "odd-degree-accounting",
         {{"rho_K4", "1"},
          {"uncovered_K4", "3"},
          {"bound_K4", "2"},
          {"bound_K4_t2", "8"},
          {"bound_K4_t4", "128"},
          {"chain_k1", "true"},
          {"chain_k2", "true"}}},
        {"10 fano-freeness of triangle systems",
         "fano-freeness",
         {{"fano_plane_fano_free", "false"},
          {"fano_frac_matching", "7/3"},
          {"triangle_systems_fano_free", "true"}}},
        {"11 lp reduction machinery",
         "lp-reduction-certificates",
         {{"fractional_iso_feasible_p1", "true"},
          {"matrix_iso_equations_p1", "true"},
          {"reduction_forward_p1", "true"},
          {"reduction_backward_p1", "true"},
          {"equal_values_p1", "true"},
          {"matrix_iso_equations_p2", "true"},
          {"equal_values_p2", "true"},
          {"matrix_iso_equations_p3", "true"},
          {"equal_values_p3", "true"},
          {"all_pairs_ok", "true"}}},
        {"12 fractional iso vs wl1 cross-validation",
         "fractional-iso-cross-validation",
         {{"pair_count_at_least_20", "true"}, {"feasibility_coincides_with_wl1", "true"}}},
    };

    std::printf("acceptance suite: %zu criteria, exact comparisons\n", criteria.size());
    for (const auto& c : criteria) run_criterion(c, cfg);

    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
