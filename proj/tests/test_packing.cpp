#include <wlpack/generators.hpp>
#include <wlpack/packing.hpp>
#include <wlpack/wl.hpp>

#include "doctest.h"
#include "oracles.hpp"

using namespace wlpack;

namespace {

Graph hq(int q) {
    std::set<int> conn;
    for (int c = 1; c <= (q - 1) / 4; c++) conn.insert(c), conn.insert(q - c);
    return make_circulant(q, conn);
}

}  // namespace

TEST_SUITE_BEGIN("packing");

TEST_CASE("fractional domination") {
    CHECK(frac_domination(make_complete(4)) == Rational(1));
    CHECK(frac_domination(make_cycle(5)) == make_rational(5, 3));
    CHECK(frac_domination(make_paley(13)) == make_rational(13, 7));
}

TEST_CASE("matching numbers via branch and bound") {
    for (int s = 1; s <= 3; s++) {
        Graph g = make_cycle(6 * s), h = scalar_multiple(2 * s, make_complete(3));
        CHECK(matching_number(g) == 3 * s);
        CHECK(matching_number(h) == 2 * s);
        CHECK(matching_number(g) == oracle::matching_number(g));
        CHECK(matching_number(h) == oracle::matching_number(h));
    }
}

TEST_CASE("vertex cover numbers") {
    for (int s = 3; s <= 5; s++) {
        Graph g = make_matched_cliques(s), h = make_complete_bipartite(s, s);
        CHECK(vertex_cover_number(g) == 2 * s - 2);
        CHECK(vertex_cover_number(h) == s);
        CHECK(vertex_cover_number(g) == oracle::vertex_cover_number(g));
        CHECK(vertex_cover_number(h) == oracle::vertex_cover_number(h));
    }
}

TEST_CASE("domination numbers") {
    CHECK(domination_number(make_cycle(5)) == oracle::domination_number(make_cycle(5)));
    CHECK(domination_number(hq(13)) == 2);
    CHECK(domination_number(hq(37)) == 2);
    Graph p13 = make_paley(13);
    CHECK(domination_number(p13) == oracle::domination_number(p13));
}

TEST_CASE("triangle packing integral values") {
    auto k3 = make_complete(3);
    auto s_sys = edge_packing_system(k3, make_shrikhande());
    auto r_sys = edge_packing_system(k3, make_rook4());
    auto rs = integral_packing(s_sys);
    auto rr = integral_packing(r_sys);
    CHECK(rs.value == 16);
    CHECK(rr.value == 8);

    // witnesses are valid packings of the right size
    auto check_witness = [](const SetSystem& sys, const BnbResult& res) {
        CHECK((long long)res.witness.size() == res.value);
        std::vector<char> used(sys.ground_size, 0);
        for (int i : res.witness)
            for (int x : sys.sets[i]) {
                CHECK(!used[x]);
                used[x] = 1;
            }
    };
    check_witness(s_sys, rs);
    check_witness(r_sys, rr);
}

TEST_CASE("fractional packing values") {
    auto k3 = make_complete(3);
    CHECK(frac_packing(k3, scalar_multiple(2, k3), PackMode::edge) == Rational(2));
    CHECK(frac_packing(k3, make_cycle(6), PackMode::edge) == Rational(0));
    CHECK(frac_packing(k3, make_shrikhande(), PackMode::edge) == Rational(16));
    CHECK(frac_packing(k3, make_rook4(), PackMode::edge) == Rational(16));
    // K2 vertex packing is the fractional matching
    for (const Graph& g : {make_cycle(5), make_matched_cliques(3), make_paley(13)})
        CHECK(frac_packing(make_complete(2), g, PackMode::vertex) ==
              frac_matching(edge_set_system(g)));
}

TEST_CASE("sandwich between integral values") {
    for (const auto& sys :
         {edge_set_system(make_cycle(7)), edge_packing_system(make_complete(3), make_rook4()),
          closed_neighborhood_system(make_paley(13)), fano_plane()}) {
        Rational nu_f = frac_matching(sys);
        CHECK(Rational(integral_packing(sys).value) <= nu_f);
        CHECK(nu_f == frac_hitting(sys));
        CHECK(nu_f <= Rational(integral_hitting(sys).value));
    }
}

TEST_CASE("matching ratio bound on equivalent pairs") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {make_cycle(6), scalar_multiple(2, make_complete(3))},
        {make_cycle(12), scalar_multiple(4, make_complete(3))},
        {make_matched_cliques(4), make_complete_bipartite(4, 4)},
        {make_paley(13), hq(13)},
    };
    for (const auto& [g, h] : pairs) {
        REQUIRE(wl_equivalent(g, h, 1));
        long long ng = matching_number(g), nh = matching_number(h);
        REQUIRE(nh > 0);
        CHECK(Rational(std::max(ng, nh)) / Rational(std::min(ng, nh)) <= make_rational(3, 2));
    }
    // tight for the cycle vs triangles family
    CHECK(Rational(matching_number(make_cycle(12))) /
              Rational(matching_number(scalar_multiple(4, make_complete(3)))) ==
          make_rational(3, 2));
}

TEST_CASE("k-extension property") {
    CHECK_FALSE(k_extension(make_complete(1), 1));
    CHECK(k_extension(make_cycle(5), 1));        // singletons always extend in C5
    CHECK_FALSE(k_extension(make_cycle(5), 2));  // two nonadjacent vertices defeat it
    CHECK(k_extension(make_paley(13), 1));
    CHECK(k_extension(make_paley(13), 2));  // strongly regular parameters leave extenders
    CHECK(k_extension(make_paley(37), 2));
    CHECK(domination_number(make_paley(37)) > 2);  // implied by the extension property
    CHECK_THROWS_AS(k_extension(make_cycle(5), 4), resource_limit_error);
}

TEST_CASE("node budget is enforced") {
    BnbOptions tight;
    tight.node_budget = 1;
    CHECK_THROWS_AS(integral_packing(edge_set_system(make_cycle(6)), tight),
                    resource_limit_error);
}

TEST_CASE("packing report") {
    auto rep = packing_report(make_complete(3), make_rook4(), PackMode::edge, true, "rook");
    CHECK(rep.fractional_value == Rational(16));
    REQUIRE(rep.integral_value.has_value());
    CHECK(*rep.integral_value == 8);
    CHECK(rep.witness.has_value());
    CHECK(rep.system_label == "rook");
}

TEST_SUITE_END();
