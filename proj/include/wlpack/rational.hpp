#pragma once

// Exact rational arithmetic used throughout. Values are always kept
// canonical: positive denominator, gcd(|num|, den) = 1.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace wlpack {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline Rational make_rational(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(p) / Rational(q);
}

// "p" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("rational: zero denominator");
        return Rational(p) / Rational(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

// Canonical form: integers print without denominator, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Small dense matrix of rationals; used for LP reduction certificates and
// fractional isomorphism matrices.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[(size_t)i * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; i++)
            for (int j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
        return t;
    }

    bool nonnegative() const {
        for (const auto& v : a_)
            if (v < 0) return false;
        return true;
    }

    // Every row and column sums to 1 and all entries are >= 0.
    bool doubly_stochastic() const {
        if (rows_ != cols_ || !nonnegative()) return false;
        for (int i = 0; i < rows_; i++) {
            Rational s = 0;
            for (int j = 0; j < cols_; j++) s += at(i, j);
            if (s != 1) return false;
        }
        for (int j = 0; j < cols_; j++) {
            Rational s = 0;
            for (int i = 0; i < rows_; i++) s += at(i, j);
            if (s != 1) return false;
        }
        return true;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; i++)
            for (int k = 0; k < a.cols_; k++) {
                const Rational& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; j++) {
                    const Rational& bkj = b.at(k, j);
                    if (bkj != 0) c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Thrown when an operation would exceed a configured size or node budget.
class resource_limit_error : public std::runtime_error {
  public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wlpack
