#include <wlpack/generators.hpp>
#include <wlpack/lp_io.hpp>
#include <wlpack/set_system.hpp>
#include <wlpack/wl.hpp>

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace wlpack;

namespace {

// max 1^t x subject to A^2 x <= 1 with A the adjacency matrix.
RationalLP square_adjacency_lp(const Graph& g) {
    const int n = g.vertex_count();
    RationalLP lp;
    lp.opt = Opt::max;
    lp.objective.assign(n, Rational(1));
    for (int i = 0; i < n; i++) {
        std::map<int, long long> walk2;
        for (int u : g.neighbors(i))
            for (int v : g.neighbors(u)) walk2[v]++;
        std::vector<LpEntry> row;
        for (auto& [j, c] : walk2) row.push_back({j, Rational(c)});
        lp.add_row(std::move(row), Rational(1));
    }
    return lp;
}

}  // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("fractional matching values against basic-solution enumeration") {
    auto k3 = matching_lp(edge_set_system(make_complete(3)));
    CHECK(solve(k3).value == make_rational(3, 2));
    CHECK(*oracle::lp_value(k3) == make_rational(3, 2));

    auto c6 = matching_lp(edge_set_system(make_cycle(6)));
    CHECK(solve(c6).value == Rational(3));
    CHECK(*oracle::lp_value(c6) == Rational(3));

    auto fano = matching_lp(fano_plane());
    CHECK(solve(fano).value == make_rational(7, 3));
    CHECK(*oracle::lp_value(fano) == make_rational(7, 3));
}

TEST_CASE("random small instances agree with the enumeration oracle") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 25; trial++) {
        RationalLP lp;
        lp.opt = trial % 2 ? Opt::min : Opt::max;
        int n = 2 + (int)(rng() % 3), m = 1 + (int)(rng() % 4);
        for (int j = 0; j < n; j++) lp.objective.push_back(Rational((long long)(rng() % 7) - 3));
        for (int i = 0; i < m; i++) {
            std::vector<LpEntry> row;
            for (int j = 0; j < n; j++) {
                long long c = (long long)(rng() % 5) - 2;
                if (c != 0) row.push_back({j, Rational(c)});
            }
            lp.add_row(std::move(row), Rational((long long)(rng() % 5)));
        }
        {
            // bounding box keeps the oracle applicable
            std::vector<LpEntry> box;
            for (int j = 0; j < n; j++) box.push_back({j, Rational(1)});
            lp.add_row(std::move(box), Rational(6));
        }
        auto got = solve(lp);
        REQUIRE(got.status == SolveStatus::optimal);
        auto want = oracle::lp_value(lp);
        REQUIRE(want.has_value());
        CHECK(got.value == *want);
    }
}

TEST_CASE("statuses") {
    RationalLP unbounded;
    unbounded.opt = Opt::max;
    unbounded.objective = {Rational(1)};
    CHECK(solve(unbounded).status == SolveStatus::unbounded);

    RationalLP bounded_min = unbounded;
    bounded_min.opt = Opt::min;
    CHECK(solve(bounded_min).value == Rational(0));

    RationalLP infeasible;
    infeasible.opt = Opt::max;
    infeasible.objective = {Rational(1)};
    infeasible.add_row({{0, Rational(1)}}, Rational(-1));
    CHECK(solve(infeasible).status == SolveStatus::infeasible);

    RationalLP shaped;
    shaped.opt = Opt::max;
    shaped.objective = {Rational(1)};
    shaped.rhs.push_back(Rational(1));  // row list left inconsistent
    CHECK_THROWS_AS(solve(shaped), std::invalid_argument);
}

TEST_CASE("solutions satisfy constraints with zero slack tolerance") {
    auto lp = matching_lp(edge_set_system(make_cycle(5)));
    auto sol = solve(lp);
    CHECK(sol.value == make_rational(5, 2));
    for (int i = 0; i < lp.num_rows(); i++) {
        Rational lhs = 0;
        for (const auto& e : lp.rows[i]) lhs += e.val * sol.x[e.col];
        CHECK(lhs <= lp.rhs[i]);
    }
    // dual certificate: equal objective values
    Rational dual_obj = 0;
    for (int i = 0; i < lp.num_rows(); i++) dual_obj += sol.dual[i] * lp.rhs[i];
    CHECK(dual_obj == sol.value);
}

TEST_CASE("duality") {
    for (const auto& sys : {edge_set_system(make_complete(3)), edge_set_system(make_cycle(6)),
                            closed_neighborhood_system(make_cycle(5)), fano_plane()}) {
        auto primal = matching_lp(sys);
        CHECK(solve(primal).value == solve(dual(primal)).value);
        CHECK(frac_matching(sys) == frac_hitting(sys));
    }
    // involution
    auto lp = matching_lp(edge_set_system(make_cycle(6)));
    auto dd = dual(dual(lp));
    CHECK(dd.opt == lp.opt);
    CHECK(dd.objective == lp.objective);
    CHECK(dd.rhs == lp.rhs);
    CHECK(solve(dd).value == solve(lp).value);
}

TEST_CASE("nu_f equals tau_f for the closed neighborhoods of the 5-cycle") {
    auto sys = closed_neighborhood_system(make_cycle(5));
    CHECK(frac_matching(sys) == make_rational(5, 3));
    CHECK(frac_hitting(sys) == make_rational(5, 3));
}

TEST_CASE("reduction certificates") {
    auto lp = matching_lp(edge_set_system(make_complete(3)));
    const int n = lp.num_vars(), m = lp.num_rows();
    ReductionCertificate id{RatMatrix::identity(m), RatMatrix::identity(n)};
    CHECK(check_reduction(lp, lp, id));
    CHECK(verify_equal_values(lp, lp, id, id));

    ReductionCertificate negative = id;
    negative.Y.at(0, 0) = -1;
    CHECK_FALSE(check_reduction(lp, lp, negative));

    ReductionCertificate zero{RatMatrix(m, m), RatMatrix(n, n)};
    CHECK_FALSE(check_reduction(lp, lp, zero));  // a^t Z = 0 fails the objective condition

    auto other = matching_lp(edge_set_system(make_cycle(6)));
    CHECK_THROWS_AS(check_reduction(lp, other, id), std::invalid_argument);
}

TEST_CASE("value of the squared-adjacency program is WL1-invariant on corpus pairs") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {make_cycle(6), scalar_multiple(2, make_complete(3))},
        {make_matched_cliques(3), make_complete_bipartite(3, 3)},
        {make_paley(13), make_circulant(13, {1, 2, 3, 10, 11, 12})},
    };
    for (const auto& [g, h] : pairs) {
        REQUIRE(wl_equivalent(g, h, 1));
        CHECK(solve(square_adjacency_lp(g)).value == solve(square_adjacency_lp(h)).value);
    }
}

TEST_CASE("size cap") {
    RationalLP big;
    big.opt = Opt::max;
    big.objective.assign(6000, Rational(0));
    CHECK_THROWS_AS(solve(big), resource_limit_error);
}

TEST_CASE("lp text round trip") {
    auto lp = parse_lp_text("# tiny\nmax 1 1 1\n1 1 0 <= 1\n0 1 1 <= 1\n1 0 1 <= 1\n");
    CHECK(lp.num_vars() == 3);
    CHECK(solve(lp).value == make_rational(3, 2));
    auto echoed = parse_lp_text(format_lp_text(lp));
    CHECK(solve(echoed).value == make_rational(3, 2));
    CHECK_THROWS_AS(parse_lp_text("1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lp_text("max 1 1\n1 1 <= \n"), std::invalid_argument);
    auto frac = parse_lp_text("min 1/2 1\n-1 -1 <= -3/2\n");
    CHECK(solve(frac).value == make_rational(3, 4));
}

TEST_SUITE_END();
