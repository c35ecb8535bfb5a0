#include <wlpack/generators.hpp>
#include <wlpack/graph_io.hpp>

#include "doctest.h"
#include "oracles.hpp"

using namespace wlpack;

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); s++) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); v++)
        if (g.degree(v) != d) return false;
    return true;
}

// strongly regular with parameters (v, k, lambda, mu)
bool is_srg(const Graph& g, int v, int k, int lambda, int mu) {
    if (g.vertex_count() != v || !is_regular(g, k)) return false;
    for (int a = 0; a < v; a++)
        for (int b = a + 1; b < v; b++) {
            int common = 0;
            for (int c : g.neighbors(a))
                if (g.has_edge(b, c)) common++;
            if (common != (g.has_edge(a, b) ? lambda : mu)) return false;
        }
    return true;
}

std::vector<Graph> generator_corpus() {
    return {
        make_cycle(3),       make_cycle(6),
        make_path(4),        make_complete(4),
        make_complete_bipartite(3, 3),
        make_circulant(13, {1, 2, 3, 10, 11, 12}),
        make_paley(13),      make_shrikhande(),
        make_rook4(),        make_matched_cliques(4),
        scalar_multiple(2, make_complete(3)),
        tensor_product(make_complete(3), make_complete(3)),
        cartesian_product(make_complete(4), make_complete(4)),
    };
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("cycles") {
    CHECK(make_cycle(3) == make_complete(3));
    Graph c6 = make_cycle(6);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(is_regular(c6, 2));
    CHECK(c6.component_count() == 1);
    CHECK(is_bipartite(c6));
    CHECK(oracle::triangle_count(make_cycle(4)) == 0);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("paths, cliques, bicliques") {
    CHECK(make_path(3).edge_count() == 2);
    CHECK(make_path(1).edge_count() == 0);
    Graph k4 = make_complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(is_regular(k4, 3));
    CHECK(make_complete_bipartite(3, 3).edge_count() == 9);
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("circulants") {
    CHECK(make_circulant(5, {1, 4}) == make_cycle(5));
    Graph h13 = make_circulant(13, {1, 2, 3, 10, 11, 12});
    CHECK(is_regular(h13, 6));
    CHECK(h13.vertex_count() == 13);
    CHECK(oracle::dominating(h13, {0, 6}));  // {0, 2s} with s = 3
    CHECK_THROWS_AS(make_circulant(6, {1, 2}), std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(make_circulant(6, {0}), std::invalid_argument);
}

TEST_CASE("paley graphs") {
    CHECK(make_paley(5) == make_cycle(5));
    Graph p13 = make_paley(13);
    CHECK(is_regular(p13, 6));
    CHECK(oracle::isomorphic(p13, complement(p13)));
    CHECK_THROWS_AS(make_paley(7), std::invalid_argument);   // 7 = 3 mod 4
    CHECK_THROWS_AS(make_paley(9), std::invalid_argument);   // prime power, unsupported
    CHECK_THROWS_AS(make_paley(15), std::invalid_argument);  // composite
}

TEST_CASE("shrikhande and rook") {
    Graph s = make_shrikhande(), r = make_rook4();
    CHECK(s.vertex_count() == 16);
    CHECK(s.edge_count() == 48);
    CHECK(r.edge_count() == 48);
    CHECK(is_srg(s, 16, 6, 2, 2));
    CHECK(is_srg(r, 16, 6, 2, 2));
    CHECK(oracle::triangle_count(s) == 32);
    CHECK(oracle::triangle_count(r) == 32);
    CHECK(r == cartesian_product(make_complete(4), make_complete(4)));
    CHECK_FALSE(oracle::isomorphic(s, r));  // same parameters, different graphs
}

TEST_CASE("matched cliques") {
    CHECK(oracle::isomorphic(make_matched_cliques(2), make_cycle(4)));
    Graph g = make_matched_cliques(3);
    CHECK(is_regular(g, 3));
    CHECK(g.edge_count() == 9);
    CHECK(make_matched_cliques(4).edge_count() == 2 * 6 + 4);
    CHECK_THROWS_AS(make_matched_cliques(1), std::invalid_argument);
}

TEST_CASE("unions and products") {
    Graph two_triangles = scalar_multiple(2, make_complete(3));
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK(two_triangles.component_count() == 2);
    CHECK(disjoint_union(make_complete(1), make_complete(1)).edge_count() == 0);
    CHECK(oracle::matching_number(two_triangles) == 2);

    Graph m = tensor_product(make_complete(2), make_complete(2));
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 2);
    CHECK(is_regular(m, 1));  // a perfect matching

    Graph t33 = tensor_product(make_complete(3), make_complete(3));
    CHECK(is_regular(t33, 4));

    Graph ss = tensor_product(make_shrikhande(), make_shrikhande());
    CHECK(ss.edge_count() == 2 * 48 * 48);

    CHECK(oracle::isomorphic(cartesian_product(make_complete(2), make_complete(2)), make_cycle(4)));
    CHECK(cartesian_product(make_complete(4), make_complete(4)).edge_count() == 48);
}

TEST_CASE("tensor product edge count identity") {
    auto corpus = generator_corpus();
    for (size_t i = 0; i + 1 < corpus.size(); i += 2) {
        const Graph &g = corpus[i], &h = corpus[i + 1];
        CHECK((long long)tensor_product(g, h).edge_count() ==
              2LL * g.edge_count() * h.edge_count());
    }
}

TEST_CASE("graph invariants enforced") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);          // self-loop
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, {1, 2}), std::invalid_argument);  // partial colors
    for (const auto& g : generator_corpus()) CHECK_NOTHROW(validate(g));
}

TEST_CASE("edge indexing is lexicographic") {
    Graph g = make_cycle(4);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(g.edge_index(3, 0) == 1);
    CHECK_THROWS_AS(g.edge_index(0, 2), std::invalid_argument);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("graph_io");

TEST_CASE("parse basics") {
    Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3 == make_complete(3));
    Graph colored = parse_graph("# comment\n2 1 1\n0 1\n0 1\n");
    CHECK(colored.colored());
    CHECK(colored.color(1) == 1);
}

TEST_CASE("round trip over the generator corpus") {
    for (const auto& g : generator_corpus()) CHECK(parse_graph(serialize_graph(g)) == g);
    Graph colored(3, {{0, 1}}, {2, 0, 1});
    CHECK(parse_graph(serialize_graph(colored)) == colored);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_graph(""), parse_error);
    CHECK_THROWS_AS(parse_graph("x y\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), parse_error);          // self-loop
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0\n"), parse_error);     // duplicate
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), parse_error);          // out of range
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), parse_error);          // truncated
    CHECK_THROWS_AS(parse_graph("2 1 1\n0 1\n0\n"), parse_error);     // short color line
    CHECK_THROWS_AS(parse_graph("2 0\nextra\n"), parse_error);        // trailing line
    try {
        parse_graph("2 1\n0 0\n");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("dot export mentions every vertex and edge") {
    std::string dot = to_dot(make_path(3));
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_SUITE_END();
