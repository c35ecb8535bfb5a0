#pragma once

// Exact rational linear programming. Canonical form throughout:
// optimize a^t x subject to Mx <= b, x >= 0, with M stored sparsely.
// The solver is a dense two-phase tableau simplex over rationals with
// Bland's anti-cycling rule as a fallback pivot rule, so it always
// terminates and every reported optimum carries an exact dual
// certificate. A presolve step recognizes complementary row pairs
// (r <= b, -r <= -b) and handles them as equalities, which keeps
// feasibility problems built from paired rows well-conditioned.

#include <wlpack/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>

namespace wlpack {

enum class Opt { min, max };

struct LpEntry {
    int col;
    Rational val;
};

struct RationalLP {
    Opt opt = Opt::max;
    std::vector<Rational> objective;          // length n
    std::vector<std::vector<LpEntry>> rows;   // m sparse rows
    std::vector<Rational> rhs;                // length m

    int num_vars() const { return (int)objective.size(); }
    int num_rows() const { return (int)rows.size(); }

    void add_row(std::vector<LpEntry> entries, Rational b) {
        std::vector<LpEntry> clean;
        for (auto& e : entries) {
            if (e.col < 0 || e.col >= num_vars())
                throw std::invalid_argument("lp: column out of range");
            if (e.val != 0) clean.push_back(std::move(e));
        }
        std::sort(clean.begin(), clean.end(),
                  [](const LpEntry& x, const LpEntry& y) { return x.col < y.col; });
        for (size_t i = 0; i + 1 < clean.size(); i++)
            if (clean[i].col == clean[i + 1].col)
                throw std::invalid_argument("lp: duplicate column in row");
        rows.push_back(std::move(clean));
        rhs.push_back(std::move(b));
    }

    void add_dense_row(const std::vector<Rational>& coeffs, Rational b) {
        if ((int)coeffs.size() != num_vars())
            throw std::invalid_argument("lp: dense row arity mismatch");
        std::vector<LpEntry> entries;
        for (int j = 0; j < (int)coeffs.size(); j++)
            if (coeffs[j] != 0) entries.push_back({j, coeffs[j]});
        rows.push_back(std::move(entries));
        rhs.push_back(std::move(b));
    }
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct LpSolution {
    SolveStatus status = SolveStatus::optimal;
    Rational value;
    std::vector<Rational> x;     // primal solution (length n)
    std::vector<Rational> dual;  // optimal solution of the dual (length m)
};

struct SolverOptions {
    int max_vars = 5000;
    int max_rows = 40000;
    // Pivots with no objective progress before switching to Bland's rule.
    int degenerate_streak = 500;
};

namespace lpdetail {

// Internal row after presolve: either one <= row or an equality standing
// for a complementary pair of <= rows.
struct PresolvedRow {
    std::vector<LpEntry> entries;
    Rational rhs;
    bool equality = false;
    int source = -1;   // original row index
    int partner = -1;  // the merged complementary row (equality only)
};

inline std::vector<PresolvedRow> pair_complementary_rows(const RationalLP& lp) {
    // key: sparse row as (col, value) list; a pair matches (-row, -rhs)
    std::map<std::vector<std::pair<int, Rational>>, std::vector<int>> index;
    auto key_of = [&](int i, bool negated) {
        std::vector<std::pair<int, Rational>> key;
        key.reserve(lp.rows[i].size() + 1);
        for (const auto& e : lp.rows[i])
            key.push_back({e.col, negated ? -e.val : e.val});
        key.push_back({-1, negated ? -lp.rhs[i] : lp.rhs[i]});
        return key;
    };
    for (int i = 0; i < lp.num_rows(); i++) index[key_of(i, false)].push_back(i);

    std::vector<char> taken(lp.num_rows(), 0);
    std::vector<PresolvedRow> out;
    for (int i = 0; i < lp.num_rows(); i++) {
        if (taken[i]) continue;
        taken[i] = 1;
        PresolvedRow row;
        row.entries = lp.rows[i];
        row.rhs = lp.rhs[i];
        row.source = i;
        auto it = index.find(key_of(i, true));
        if (it != index.end() && !lp.rows[i].empty()) {
            for (int j : it->second) {
                if (!taken[j]) {
                    taken[j] = 1;
                    row.equality = true;
                    row.partner = j;
                    break;
                }
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

class Tableau {
  public:
    Tableau(const RationalLP& lp, const std::vector<PresolvedRow>& prows,
            const SolverOptions& opts)
        : n_(lp.num_vars()), m_((int)prows.size()) {
        if (n_ > opts.max_vars || lp.num_rows() > opts.max_rows)
            throw resource_limit_error("lp: instance exceeds dense-tableau size cap");

        flip_.assign(m_, 1);
        slack_col_.assign(m_, -1);
        art_col_.assign(m_, -1);
        int slack_count = 0, art_count = 0;
        for (const auto& r : prows) {
            if (!r.equality) slack_count++;
            if (r.equality || r.rhs < 0) art_count++;
        }
        cols_ = n_ + slack_count + art_count;
        rows_.assign(m_, std::vector<Rational>(cols_ + 1));
        basis_.assign(m_, -1);

        int next_slack = n_, next_art = n_ + slack_count;
        first_art_ = n_ + slack_count;
        for (int i = 0; i < m_; i++) {
            const auto& r = prows[i];
            bool flip = r.rhs < 0;
            flip_[i] = flip ? -1 : 1;
            for (const auto& e : r.entries) rows_[i][e.col] = flip ? -e.val : e.val;
            rows_[i][cols_] = flip ? -r.rhs : r.rhs;
            if (!r.equality) {
                slack_col_[i] = next_slack;
                rows_[i][next_slack] = flip_[i];
                next_slack++;
            }
            if (r.equality || flip) {
                art_col_[i] = next_art;
                rows_[i][next_art] = 1;
                basis_[i] = next_art;
                next_art++;
            } else {
                basis_[i] = slack_col_[i];
            }
        }
    }

    // Maximizes the objective c (over all tableau columns) from the
    // current basis. Returns false if unbounded.
    bool maximize(const std::vector<Rational>& c, bool forbid_artificials,
                  const SolverOptions& opts) {
        // zrow[j] = c_j - c_B B^-1 A_j; entering needs zrow[j] > 0.
        zrow_.assign(cols_ + 1, Rational(0));
        for (int j = 0; j < cols_; j++) zrow_[j] = j < (int)c.size() ? c[j] : Rational(0);
        for (int i = 0; i < m_; i++) {
            const Rational cb = basis_[i] < (int)c.size() ? c[basis_[i]] : Rational(0);
            if (cb == 0) continue;
            for (int j = 0; j <= cols_; j++)
                if (rows_[i][j] != 0) zrow_[j] -= cb * rows_[i][j];
        }

        int stall = 0;
        bool bland = false;
        while (true) {
            int enter = -1;
            if (bland) {
                for (int j = 0; j < cols_; j++) {
                    if (forbid_artificials && j >= first_art_) break;
                    if (zrow_[j] > 0) {
                        enter = j;
                        break;
                    }
                }
            } else {
                const Rational* best = nullptr;
                for (int j = 0; j < cols_; j++) {
                    if (forbid_artificials && j >= first_art_) break;
                    if (zrow_[j] > 0 && (!best || zrow_[j] > *best)) {
                        best = &zrow_[j];
                        enter = j;
                    }
                }
            }
            if (enter < 0) return true;  // optimal

            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m_; i++) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded

            if (best_ratio == 0) {
                if (++stall >= opts.degenerate_streak) bland = true;
            } else {
                stall = 0;
                bland = false;
            }
            pivot(leave, enter);
        }
    }

    void pivot(int r, int c) {
        Rational piv = rows_[r][c];
        if (piv == 0) throw std::logic_error("lp: zero pivot");
        for (int j = 0; j <= cols_; j++)
            if (rows_[r][j] != 0) rows_[r][j] /= piv;
        for (int i = 0; i < m_; i++) {
            if (i == r) continue;
            const Rational f = rows_[i][c];
            if (f == 0) continue;
            for (int j = 0; j <= cols_; j++)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
        }
        {
            const Rational f = zrow_[c];
            if (f != 0)
                for (int j = 0; j <= cols_; j++)
                    if (rows_[r][j] != 0) zrow_[j] -= f * rows_[r][j];
        }
        basis_[r] = c;
    }

    // After phase 1: drive any basic artificial out of the basis; rows
    // that stay artificial-basic are redundant and inert (value 0).
    void retire_artificials() {
        for (int i = 0; i < m_; i++) {
            if (basis_[i] < first_art_) continue;
            int c = -1;
            for (int j = 0; j < first_art_; j++)
                if (rows_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c >= 0) pivot(i, c);
        }
    }

    Rational objective_value() const { return -zrow_[cols_]; }

    std::vector<Rational> primal(int n) const {
        std::vector<Rational> x(n);
        for (int i = 0; i < m_; i++)
            if (basis_[i] < n) x[basis_[i]] = rows_[i][cols_];
        return x;
    }

    // Dual value of presolved row i, in the orientation of its source row.
    // Slack columns already carry the row's sign flip; artificial columns
    // are plain unit columns, so the flip is applied here.
    Rational dual_of_row(int i) const {
        if (slack_col_[i] >= 0) return -zrow_[slack_col_[i]];
        return flip_[i] == 1 ? -zrow_[art_col_[i]] : zrow_[art_col_[i]];
    }

    bool has_artificials() const { return first_art_ < cols_; }
    int width() const { return cols_; }
    int first_artificial() const { return first_art_; }

  private:
    int n_, m_, cols_ = 0, first_art_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> zrow_;
    std::vector<int> basis_;
    std::vector<int> flip_;
    std::vector<int> slack_col_;
    std::vector<int> art_col_;
};

}  // namespace lpdetail

// Exact optimum with primal solution and a dual solution certifying
// optimality. Infeasible and unbounded outcomes are statuses, not errors.
inline LpSolution solve(const RationalLP& lp, SolverOptions opts = {}) {
    const int n = lp.num_vars(), m = lp.num_rows();
    if ((int)lp.rhs.size() != m || (int)lp.rows.size() != m)
        throw std::invalid_argument("lp: inconsistent dimensions");
    const bool maximizing = lp.opt == Opt::max;

    auto prows = lpdetail::pair_complementary_rows(lp);
    lpdetail::Tableau tab(lp, prows, opts);

    // Phase 1: maximize minus the sum of artificials.
    if (tab.has_artificials()) {
        std::vector<Rational> c1(tab.width(), Rational(0));
        for (int j = tab.first_artificial(); j < tab.width(); j++) c1[j] = -1;
        if (!tab.maximize(c1, false, opts)) throw std::logic_error("lp: phase 1 unbounded");
        if (tab.objective_value() != 0) return {SolveStatus::infeasible, Rational(0), {}, {}};
        tab.retire_artificials();
    }

    // Phase 2 on the real objective, artificial columns frozen out.
    std::vector<Rational> c2(tab.width(), Rational(0));
    for (int j = 0; j < n; j++) c2[j] = maximizing ? lp.objective[j] : -lp.objective[j];
    if (!tab.maximize(c2, true, opts)) return {SolveStatus::unbounded, Rational(0), {}, {}};

    LpSolution sol;
    sol.status = SolveStatus::optimal;
    sol.x = tab.primal(n);

    // Map presolved duals back to the original rows. An equality row's
    // free multiplier splits into the nonnegative duals of its two
    // complementary source rows.
    sol.dual.assign(m, Rational(0));
    for (int i = 0; i < (int)prows.size(); i++) {
        Rational y = tab.dual_of_row(i);
        if (prows[i].equality) {
            if (y >= 0)
                sol.dual[prows[i].source] = y;
            else
                sol.dual[prows[i].partner] = -y;
        } else {
            sol.dual[prows[i].source] = y;
        }
    }

    // Exact certificates: primal feasibility, dual feasibility, and equal
    // objectives. Any violation is a solver bug, not a data error.
    sol.value = 0;
    for (int j = 0; j < n; j++) {
        if (sol.x[j] < 0) throw std::logic_error("lp: negative primal variable");
        sol.value += lp.objective[j] * sol.x[j];
    }
    Rational dual_value = 0;
    for (int i = 0; i < m; i++) {
        Rational lhs = 0;
        for (const auto& e : lp.rows[i]) lhs += e.val * sol.x[e.col];
        if (lhs > lp.rhs[i]) throw std::logic_error("lp: primal infeasibility");
        if (sol.dual[i] < 0) throw std::logic_error("lp: negative dual variable");
        dual_value += sol.dual[i] * lp.rhs[i];
    }
    std::vector<Rational> yM(n, Rational(0));
    for (int i = 0; i < m; i++) {
        if (sol.dual[i] == 0) continue;
        for (const auto& e : lp.rows[i]) yM[e.col] += sol.dual[i] * e.val;
    }
    for (int j = 0; j < n; j++) {
        if (yM[j] < (maximizing ? lp.objective[j] : -lp.objective[j]))
            throw std::logic_error("lp: dual infeasibility");
    }
    const Rational tableau_value = maximizing ? dual_value : -dual_value;
    if (tableau_value != sol.value) throw std::logic_error("lp: duality gap");
    return sol;
}

// Standard LP dual, kept in canonical <=-form; an exact involution:
// dual(dual(L)) == L, and solve(dual(L)).value == solve(L).value whenever
// both are optimal.
inline RationalLP dual(const RationalLP& lp) {
    const int n = lp.num_vars(), m = lp.num_rows();
    RationalLP d;
    d.opt = lp.opt == Opt::max ? Opt::min : Opt::max;
    d.objective.resize(m);
    for (int i = 0; i < m; i++) d.objective[i] = lp.opt == Opt::max ? lp.rhs[i] : -lp.rhs[i];
    // rows of the dual are -M^t
    std::vector<std::vector<LpEntry>> cols(n);
    for (int i = 0; i < m; i++)
        for (const auto& e : lp.rows[i]) cols[e.col].push_back({i, -e.val});
    d.rows = std::move(cols);
    d.rhs.resize(n);
    for (int j = 0; j < n; j++)
        d.rhs[j] = lp.opt == Opt::max ? -lp.objective[j] : lp.objective[j];
    return d;
}

// Certificate that L1 reduces to L2: nonnegative Y, Z with
// a^t Z <> c^t (componentwise, <= for min and >= for max), MZ <= YN, and
// Y d <= b.
struct ReductionCertificate {
    RatMatrix Y;  // m x m
    RatMatrix Z;  // n x n
};

inline bool check_reduction(const RationalLP& l1, const RationalLP& l2,
                            const ReductionCertificate& cert) {
    const int n = l1.num_vars(), m = l1.num_rows();
    if (l2.num_vars() != n || l2.num_rows() != m || l1.opt != l2.opt)
        throw std::invalid_argument("check_reduction: shape or sense mismatch");
    if (cert.Y.rows() != m || cert.Y.cols() != m || cert.Z.rows() != n || cert.Z.cols() != n)
        throw std::invalid_argument("check_reduction: certificate shape mismatch");

    if (!cert.Y.nonnegative() || !cert.Z.nonnegative()) return false;

    // a^t Z vs c^t
    for (int j = 0; j < n; j++) {
        Rational az = 0;
        for (int i = 0; i < n; i++)
            if (l1.objective[i] != 0) az += l1.objective[i] * cert.Z.at(i, j);
        if (l1.opt == Opt::min ? !(az <= l2.objective[j]) : !(az >= l2.objective[j]))
            return false;
    }

    // MZ <= YN
    RatMatrix mz(m, n), yn(m, n);
    for (int i = 0; i < m; i++)
        for (const auto& e : l1.rows[i])
            for (int j = 0; j < n; j++)
                if (cert.Z.at(e.col, j) != 0) mz.at(i, j) += e.val * cert.Z.at(e.col, j);
    for (int i = 0; i < m; i++)
        for (int k = 0; k < m; k++) {
            const Rational& y = cert.Y.at(i, k);
            if (y == 0) continue;
            for (const auto& e : l2.rows[k]) yn.at(i, e.col) += y * e.val;
        }
    for (int i = 0; i < m; i++)
        for (int j = 0; j < n; j++)
            if (!(mz.at(i, j) <= yn.at(i, j))) return false;

    // Yd <= b
    for (int i = 0; i < m; i++) {
        Rational yd = 0;
        for (int k = 0; k < m; k++)
            if (cert.Y.at(i, k) != 0) yd += cert.Y.at(i, k) * l2.rhs[k];
        if (!(yd <= l1.rhs[i])) return false;
    }
    return true;
}

// Mutual reductions imply equal values; this checks both certificates and
// then the value equality end to end.
inline bool verify_equal_values(const RationalLP& l1, const RationalLP& l2,
                                const ReductionCertificate& c12, const ReductionCertificate& c21,
                                SolverOptions opts = {}) {
    if (!check_reduction(l1, l2, c12)) return false;
    if (!check_reduction(l2, l1, c21)) return false;
    auto s1 = solve(l1, opts);
    auto s2 = solve(l2, opts);
    if (s1.status != SolveStatus::optimal || s2.status != SolveStatus::optimal) return false;
    return s1.value == s2.value;
}

}  // namespace wlpack
