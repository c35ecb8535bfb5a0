#include <wlpack/generators.hpp>
#include <wlpack/wl.hpp>

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace wlpack;

namespace {

Graph two_triangles() { return scalar_multiple(2, make_complete(3)); }

std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    for (int i = n - 1; i > 0; i--) std::swap(p[i], p[(int)(rng() % (std::uint64_t)(i + 1))]);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("wl");

TEST_CASE("regular graphs are WL1-monochromatic") {
    Graph c6 = make_cycle(6), h = two_triangles();
    auto sc = wl_refine(c6, &h, 1);
    CHECK(sc.palettes[0].size() == 1);
    CHECK(sc.palettes[1].size() == 1);
    CHECK(sc.palettes_equal());
    CHECK(sc.rounds_used <= 6);
}

TEST_CASE("WL2 separates the cycle from two triangles") {
    Graph c6 = make_cycle(6), h = two_triangles();
    CHECK(wl_equivalent(h, c6, 1));
    CHECK_FALSE(wl_equivalent(h, c6, 2));
}

TEST_CASE("shrikhande and rook are WL2-equivalent but WL3-distinguishable") {
    Graph s = make_shrikhande(), r = make_rook4();
    auto sc = wl_refine(s, &r, 2);
    CHECK(sc.palettes_equal());
    CHECK(wl_equivalent(s, r, 1));
    CHECK_FALSE(wl_equivalent(s, r, 3));
}

TEST_CASE("matched cliques vs complete bipartite") {
    for (int s = 3; s <= 5; s++)
        CHECK(wl_equivalent(make_matched_cliques(s), make_complete_bipartite(s, s), 1));
}

TEST_CASE("degree sequences separate at WL1") {
    Graph k3 = make_complete(3);
    Graph p3k1 = disjoint_union(make_path(3), make_complete(1));
    CHECK_FALSE(wl_equivalent(k3, p3k1, 1));  // already by vertex count
    CHECK_FALSE(wl_equivalent(make_cycle(6), make_path(6), 1));
}

TEST_CASE("cycles vs triangle unions for several sizes") {
    for (int s = 1; s <= 3; s++)
        CHECK(wl_equivalent(make_cycle(6 * s), scalar_multiple(2 * s, make_complete(3)), 1));
}

TEST_CASE("equitable partitions") {
    auto p = equitable_partition(make_cycle(6));
    CHECK(p.blocks.size() == 1);
    CHECK(p.blocks[0].size() == 6);

    auto star = equitable_partition(make_star(3));
    CHECK(star.blocks.size() == 2);
    std::vector<size_t> sizes{star.blocks[0].size(), star.blocks[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3});

    CHECK(equitable_partition(make_paley(13)).blocks.size() == 1);
}

TEST_CASE("is_equitable") {
    for (const Graph& g : {make_cycle(6), make_star(3), make_matched_cliques(3), make_paley(13)})
        CHECK(is_equitable(g, equitable_partition(g)));

    Graph p3 = make_path(3);
    VertexPartition single{3, {{0, 1, 2}}};
    CHECK_FALSE(is_equitable(p3, single));

    VertexPartition bogus{3, {{0, 1}}};
    CHECK_THROWS_AS(is_equitable(p3, bogus), std::invalid_argument);
    VertexPartition overlap{3, {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(is_equitable(p3, overlap), std::invalid_argument);

    // colors must be constant per block
    Graph colored(2, {}, {0, 1});
    VertexPartition both{2, {{0, 1}}};
    CHECK_FALSE(is_equitable(colored, both));
}

TEST_CASE("refining an equitable partition of a colored graph keeps it") {
    // incidence-style coloring: blocks of the stable coloring refine the input colors
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 1, 0});
    auto p = equitable_partition(g);
    CHECK(is_equitable(g, p));
    for (const auto& block : p.blocks) {
        for (int v : block) CHECK(g.color(v) == g.color(block[0]));
    }
}

TEST_CASE("edge colors") {
    Graph star = make_star(3);
    auto c01 = wl2_edge_color(star, 0, 1);
    auto c02 = wl2_edge_color(star, 0, 2);
    auto c03 = wl2_edge_color(star, 0, 3);
    CHECK(c01 == c02);
    CHECK(c01 == c03);

    Graph p3 = make_path(3);
    CHECK(wl2_edge_color(p3, 0, 1) == wl2_edge_color(p3, 1, 2));
    CHECK_THROWS_AS(wl2_edge_color(p3, 0, 2), std::invalid_argument);

    // all edges of shrikhande and rook share one palette of pair colors
    Graph s = make_shrikhande(), r = make_rook4();
    auto sc = wl_refine(s, &r, 2);
    std::set<std::pair<std::uint64_t, std::uint64_t>> cs, cr;
    for (const auto& [u, v] : s.edges()) cs.insert(edge_color(sc, 0, u, v));
    for (const auto& [u, v] : r.edges()) cr.insert(edge_color(sc, 1, u, v));
    CHECK(cs == cr);
}

TEST_CASE("permuting either input leaves equivalence unchanged") {
    std::uint64_t seed = 99;
    for (const Graph& g : {make_shrikhande(), make_paley(13), make_matched_cliques(4)}) {
        Graph h = permuted(g, seeded_permutation(g.vertex_count(), seed++));
        for (int k = 1; k <= 3; k++) CHECK(wl_equivalent(g, h, k));
    }
}

TEST_CASE("WL-(k+1) equivalence implies WL-k equivalence on the corpus") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {make_cycle(6), two_triangles()},
        {make_shrikhande(), make_rook4()},
        {make_matched_cliques(3), make_complete_bipartite(3, 3)},
        {make_cycle(8), make_path(8)},
        {make_paley(13), permuted(make_paley(13), seeded_permutation(13, 7))},
    };
    for (const auto& [g, h] : pairs)
        for (int k = 1; k <= 2; k++)
            if (wl_equivalent(g, h, k + 1)) CHECK(wl_equivalent(g, h, k));
}

TEST_CASE("WL1 verdicts match an independent refinement") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {make_cycle(6), two_triangles()},
        {make_cycle(6), make_path(6)},
        {make_matched_cliques(4), make_complete_bipartite(4, 4)},
        {make_matched_cliques(4), make_matched_cliques(4)},
        {make_shrikhande(), make_rook4()},
        {make_star(3), disjoint_union(make_path(3), make_complete(1))},
        {make_path(5), make_path(5)},
        {disjoint_union(make_cycle(4), make_complete(1)), make_path(5)},
        {make_paley(13), make_circulant(13, {1, 2, 3, 10, 11, 12})},
    };
    for (const auto& [g, h] : pairs)
        CHECK(wl_equivalent(g, h, 1) == oracle::wl1_equivalent(g, h));
}

TEST_CASE("padded edge colors for k = 3") {
    Graph star = make_star(3);
    auto sc = wl_refine(star, nullptr, 3);
    auto c01 = edge_color(sc, 0, 0, 1);
    auto c02 = edge_color(sc, 0, 0, 2);
    CHECK(c01 == c02);
}

TEST_CASE("determinism") {
    Graph s = make_shrikhande(), r = make_rook4();
    auto a = wl_refine(s, &r, 2);
    auto b = wl_refine(s, &r, 2);
    CHECK(a.colors[0] == b.colors[0]);
    CHECK(a.colors[1] == b.colors[1]);
    CHECK(a.rounds_used == b.rounds_used);
}

TEST_CASE("stabilization bound") {
    for (const Graph& g : {make_path(7), make_cycle(9), make_matched_cliques(3)}) {
        auto sc = wl_refine(g, nullptr, 1);
        CHECK(sc.rounds_used <= g.vertex_count());
    }
    auto sc2 = wl_refine(make_path(4), nullptr, 2);
    CHECK(sc2.rounds_used <= 16);
}

TEST_CASE("parameter and resource errors") {
    CHECK_THROWS_AS(wl_refine(make_cycle(4), nullptr, 0), std::invalid_argument);
    WlOptions tiny;
    tiny.max_tuples = 10;
    CHECK_THROWS_AS(wl_refine(make_cycle(6), nullptr, 2, tiny), resource_limit_error);
}

TEST_CASE("vertex colors participate in refinement") {
    // same underlying graph, different colorings: distinguishable
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 0, 1, 1});
    Graph b(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 0, 1});
    CHECK_FALSE(wl_equivalent(a, b, 1));
    CHECK(wl_equivalent(a, a, 1));
}

TEST_SUITE_END();
