#pragma once

// First homology of a pairing presentation: exponent-sum matrix, integer
// Smith normal form with unimodular transforms, invariant factors.

#include <sstream>
#include <string>
#include <vector>

#include "spaceform/bigint.hpp"
#include "spaceform/pairing.hpp"
#include "spaceform/words.hpp"

namespace spaceform {

using IntegerMatrix = std::vector<std::vector<BigInt>>;

inline IntegerMatrix abelianize(const GroupPresentation& p) {
    IntegerMatrix m;
    for (const auto& r : p.relators) {
        auto sums = exponent_sums(r, static_cast<int>(p.generators.size()));
        std::vector<BigInt> row;
        for (long long s : sums) row.emplace_back(s);
        m.push_back(std::move(row));
    }
    return m;
}

struct SmithResult {
    IntegerMatrix u, d, v; // u * m * v = d, with u and v unimodular
};

namespace snfdetail {

inline IntegerMatrix identity(size_t n) {
    IntegerMatrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = BigInt(1);
    return m;
}

inline void row_swap(IntegerMatrix& m, size_t a, size_t b) { std::swap(m[a], m[b]); }

inline void col_swap(IntegerMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

inline void row_addmul(IntegerMatrix& m, size_t dst, size_t src, const BigInt& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = m[dst][j] + f * m[src][j];
}

inline void col_addmul(IntegerMatrix& m, size_t dst, size_t src, const BigInt& f) {
    for (auto& row : m) row[dst] = row[dst] + f * row[src];
}

inline void row_negate(IntegerMatrix& m, size_t r) {
    for (auto& x : m[r]) x = -x;
}

} // namespace snfdetail

// Standard reduction with the smallest-absolute-value pivot, tracking the
// unimodular row and column operations; exact arithmetic throughout.
inline SmithResult smith_normal_form(const IntegerMatrix& input) {
    using namespace snfdetail;
    SmithResult s;
    s.d = input;
    size_t rows = s.d.size();
    size_t cols = rows ? s.d[0].size() : 0;
    s.u = identity(rows);
    s.v = identity(cols);
    if (rows == 0 || cols == 0) return s;

    size_t k = 0;
    while (k < rows && k < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        size_t pi = k, pj = k;
        bool found = false;
        BigInt best;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                if (j < k) continue;
                if (s.d[i][j].is_zero()) continue;
                BigInt a = s.d[i][j].abs();
                if (!found || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != k) {
            row_swap(s.d, pi, k);
            row_swap(s.u, pi, k);
        }
        if (pj != k) {
            col_swap(s.d, pj, k);
            col_swap(s.v, pj, k);
        }

        bool clean = true;
        for (size_t i = k + 1; i < rows; ++i)
            if (!s.d[i][k].is_zero()) {
                BigInt q = s.d[i][k] / s.d[k][k];
                row_addmul(s.d, i, k, -q);
                row_addmul(s.u, i, k, -q);
                if (!s.d[i][k].is_zero()) clean = false;
            }
        for (size_t j = k + 1; j < cols; ++j)
            if (!s.d[k][j].is_zero()) {
                BigInt q = s.d[k][j] / s.d[k][k];
                col_addmul(s.d, j, k, -q);
                col_addmul(s.v, j, k, -q);
                if (!s.d[k][j].is_zero()) clean = false;
            }
        if (!clean) continue; // remainder became the new smaller pivot candidate

        // enforce divisibility d_k | everything below-right
        bool fixed = true;
        for (size_t i = k + 1; i < rows && fixed; ++i)
            for (size_t j = k + 1; j < cols && fixed; ++j)
                if (!(s.d[i][j] % s.d[k][k]).is_zero()) {
                    row_addmul(s.d, k, i, BigInt(1));
                    row_addmul(s.u, k, i, BigInt(1));
                    fixed = false;
                }
        if (!fixed) continue;

        if (s.d[k][k].negative()) {
            row_negate(s.d, k);
            row_negate(s.u, k);
        }
        ++k;
    }
    return s;
}

// |det| of a square integer matrix by fraction-free Gaussian elimination
// (used by the tests to certify unimodularity of the transforms).
inline BigInt integer_determinant(IntegerMatrix m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt sign(1), denom(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return BigInt(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
            m[i][k] = BigInt(0);
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<BigInt> invariant_factors; // each > 1, divisibility chain

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        auto sep = [&] {
            if (!first) os << " \u2295 ";
            first = false;
        };
        if (free_rank == 1) {
            sep();
            os << "Z";
        } else if (free_rank > 1) {
            sep();
            os << "Z^" << free_rank;
        }
        for (const auto& d : invariant_factors) {
            sep();
            os << "Z_" << d.str();
        }
        if (first) os << "0";
        return os.str();
    }
};

inline HomologyGroup first_homology(const GroupPresentation& p) {
    IntegerMatrix m = abelianize(p);
    HomologyGroup h;
    if (m.empty()) {
        h.free_rank = static_cast<long long>(p.generators.size());
        return h;
    }
    SmithResult s = smith_normal_form(m);
    size_t rank = 0;
    size_t n = std::min(s.d.size(), s.d[0].size());
    for (size_t i = 0; i < n; ++i)
        if (!s.d[i][i].is_zero()) ++rank;
    h.free_rank = static_cast<long long>(p.generators.size()) - static_cast<long long>(rank);
    for (size_t i = 0; i < n; ++i)
        if (!s.d[i][i].is_zero() && s.d[i][i] > BigInt(1))
            h.invariant_factors.push_back(s.d[i][i]);
    return h;
}

// Membership of an exponent vector in the integer row span of a matrix:
// with u m v = d, the vector x lies in the span iff y = x v is divisible
// component-wise by the diagonal (zero where d is zero).
inline bool in_row_span(const IntegerMatrix& m, const std::vector<BigInt>& x) {
    if (m.empty()) {
        for (const auto& c : x)
            if (!c.is_zero()) return false;
        return true;
    }
    SmithResult s = smith_normal_form(m);
    size_t cols = m[0].size();
    std::vector<BigInt> y(cols, BigInt(0));
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < cols; ++i) y[j] = y[j] + x[i] * s.v[i][j];
    size_t n = std::min(s.d.size(), cols);
    for (size_t j = 0; j < cols; ++j) {
        BigInt dj = j < n ? s.d[j][j] : BigInt(0);
        if (dj.is_zero()) {
            if (!y[j].is_zero()) return false;
        } else if (!(y[j] % dj).is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace spaceform
