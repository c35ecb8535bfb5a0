#pragma once

// Fractional graph isomorphism: a doubly stochastic X with AX = XB,
// decided by exact LP feasibility. For colored graphs, X is additionally
// forced to vanish across color classes, so only same-color variables
// are created.
//
// The constraints split into a large linear equality system (AX = XB and
// the row/column sums) and nonnegativity. The equality system is first
// eliminated exactly by Gaussian elimination; a phase-1 simplex with a
// zero objective then decides whether the solution space meets the
// nonnegative orthant. Every returned X is re-verified exactly.

#include <wlpack/graph.hpp>
#include <wlpack/lp.hpp>

#include <map>

namespace wlpack {

struct FractionalIso {
    bool feasible = false;
    RatMatrix X;  // n x n doubly stochastic with AX = XB when feasible
};

namespace isodetail {

// Reduced row echelon form of [E | f]. Returns false if a row
// 0 = nonzero appears (inconsistent system). After the call, pivots
// lists (row, col) in elimination order.
inline bool rref(std::vector<std::vector<Rational>>& a, std::vector<std::pair<int, int>>& pivots) {
    const int rows = (int)a.size();
    if (rows == 0) return true;
    const int cols = (int)a[0].size();  // includes the rhs column
    int rank = 0;
    for (int col = 0; col < cols - 1 && rank < rows; col++) {
        int piv = -1;
        for (int r = rank; r < rows; r++) {
            if (a[r][col] == 0) continue;
            if (piv < 0) piv = r;
            // prefer unit pivots: they keep the elimination sparse
            if (a[r][col] == 1 || a[r][col] == -1) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const Rational p = a[rank][col];
        if (p != 1)
            for (int j = col; j < cols; j++)
                if (a[rank][j] != 0) a[rank][j] /= p;
        for (int r = 0; r < rows; r++) {
            if (r == rank) continue;
            const Rational f = a[r][col];
            if (f == 0) continue;
            for (int j = col; j < cols; j++)
                if (a[rank][j] != 0) a[r][j] -= f * a[rank][j];
        }
        pivots.push_back({rank, col});
        rank++;
    }
    for (int r = rank; r < rows; r++)
        if (a[r][cols - 1] != 0) return false;
    return true;
}

}  // namespace isodetail

inline FractionalIso find_fractional_graph_iso(const Graph& G, const Graph& H,
                                               SolverOptions opts = {}) {
    const int n = G.vertex_count();
    if (H.vertex_count() != n) return {};
    {
        std::map<int, int> cg, ch;
        for (int v = 0; v < n; v++) cg[G.color(v)]++, ch[H.color(v)]++;
        if (cg != ch) return {};
    }
    if (n == 0) return {true, RatMatrix(0, 0)};

    // Variables: X_{u,v} for u in V(G), v in V(H) of the same color.
    std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
    int nv = 0;
    for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++)
            if (G.color(u) == H.color(v)) var[u][v] = nv++;
    if (nv > opts.max_vars)
        throw resource_limit_error("fractional iso: instance exceeds size cap");

    // Equality system rows: (AX)_{u,w} - (XB)_{u,w} = 0, row sums = 1,
    // column sums = 1. Rows with no variables are identically 0 = 0.
    std::vector<std::vector<Rational>> eq;
    auto blank = [&]() { return std::vector<Rational>(nv + 1, Rational(0)); };
    for (int u = 0; u < n; u++)
        for (int w = 0; w < n; w++) {
            auto row = blank();
            bool any = false;
            for (int v : G.neighbors(u))
                if (var[v][w] >= 0) row[var[v][w]] += 1, any = true;
            for (int v : H.neighbors(w))
                if (var[u][v] >= 0) row[var[u][v]] -= 1, any = true;
            if (any) eq.push_back(std::move(row));
        }
    for (int u = 0; u < n; u++) {
        auto row = blank(), col = blank();
        bool any_row = false, any_col = false;
        for (int v = 0; v < n; v++) {
            if (var[u][v] >= 0) row[var[u][v]] = 1, any_row = true;
            if (var[v][u] >= 0) col[var[v][u]] = 1, any_col = true;
        }
        if (!any_row || !any_col) return {};  // an empty color class cannot sum to 1
        row[nv] = 1;
        col[nv] = 1;
        eq.push_back(std::move(row));
        eq.push_back(std::move(col));
    }

    std::vector<std::pair<int, int>> pivots;
    if (!isodetail::rref(eq, pivots)) return {};  // inconsistent equalities

    // Basic variables are an exact affine function of the free ones:
    // x_basic = rhs - T x_free. Feasibility needs a free point >= 0 with
    // x_basic >= 0, a phase-1-only LP with a zero objective.
    std::vector<int> pivot_col_of_row((int)pivots.size());
    std::vector<char> is_basic(nv, 0);
    for (auto [r, c] : pivots) {
        pivot_col_of_row[r] = c;
        is_basic[c] = 1;
    }
    std::vector<int> free_cols;
    std::vector<int> free_index(nv, -1);
    for (int j = 0; j < nv; j++)
        if (!is_basic[j]) {
            free_index[j] = (int)free_cols.size();
            free_cols.push_back(j);
        }

    RationalLP reduced;
    reduced.opt = Opt::max;
    reduced.objective.assign(free_cols.size(), Rational(0));
    for (size_t r = 0; r < pivots.size(); r++) {
        // -(x_basic) = sum_j T_rj x_free_j - rhs <= 0
        std::vector<LpEntry> entries;
        for (int j : free_cols)
            if (eq[r][j] != 0) entries.push_back({free_index[j], eq[r][j]});
        reduced.add_row(std::move(entries), eq[r][nv]);
    }
    auto sol = solve(reduced, opts);
    if (sol.status != SolveStatus::optimal) return {};

    // Reconstruct the full solution and re-verify everything exactly.
    std::vector<Rational> x(nv, Rational(0));
    for (size_t j = 0; j < free_cols.size(); j++) x[free_cols[j]] = sol.x[j];
    for (size_t r = 0; r < pivots.size(); r++) {
        Rational v = eq[r][nv];
        for (int j : free_cols)
            if (eq[r][j] != 0) v -= eq[r][j] * x[j];
        x[pivot_col_of_row[r]] = v;
    }

    FractionalIso out;
    out.feasible = true;
    out.X = RatMatrix(n, n);
    for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++)
            if (var[u][v] >= 0) out.X.at(u, v) = x[var[u][v]];

    if (!out.X.doubly_stochastic()) throw std::logic_error("fractional iso: X not doubly stochastic");
    for (int u = 0; u < n; u++)
        for (int w = 0; w < n; w++) {
            Rational ax = 0, xb = 0;
            for (int v : G.neighbors(u)) ax += out.X.at(v, w);
            for (int v : H.neighbors(w)) xb += out.X.at(u, v);
            if (ax != xb) throw std::logic_error("fractional iso: AX != XB");
        }
    return out;
}

// Splits the doubly stochastic matrix of a fractional isomorphism between
// two incidence graphs (m ground vertices colored 0, then n set vertices
// colored 1) into its diagonal blocks Y (m x m) and Z (n x n). The
// off-diagonal blocks must vanish.
inline std::pair<RatMatrix, RatMatrix> fractional_matrix_iso_from_graph_iso(const RatMatrix& X,
                                                                            int m, int n) {
    if (X.rows() != m + n || X.cols() != m + n)
        throw std::invalid_argument("matrix iso: X has wrong shape");
    for (int i = 0; i < m + n; i++)
        for (int j = 0; j < m + n; j++) {
            bool cross = (i < m) != (j < m);
            if (cross && X.at(i, j) != 0)
                throw std::invalid_argument("matrix iso: X not block-structured per colors");
        }
    RatMatrix Y(m, m), Z(n, n);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) Y.at(i, j) = X.at(i, j);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) Z.at(i, j) = X.at(m + i, m + j);
    return {Y, Z};
}

}  // namespace wlpack
