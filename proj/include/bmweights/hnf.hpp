#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>
#include <vector>

#include "bmweights/errors.hpp"

/* Exact integer linear algebra: column-style Hermite normal form.
 *
 * For an m x n integer matrix A, column_hermite produces a unimodular U with
 * A U = H in column echelon form: the first `rank` columns of H are nonzero,
 * their pivot rows are strictly increasing, pivots are positive, and in each
 * pivot row the entries of earlier columns lie in [0, pivot).  The trailing
 * n - rank columns of U are a basis of the integer kernel of A.
 *
 * Matrices are stored column-major so that the column operations of the
 * reduction are contiguous.
 */

namespace bmweights {

using BigInt = boost::multiprecision::cpp_int;

struct ColMatrix {
    int rows = 0;
    std::vector<std::vector<BigInt>> cols;

    ColMatrix() = default;
    ColMatrix(int r, int c) : rows(r), cols(static_cast<std::size_t>(c)) {
        for (auto& col : cols) col.assign(static_cast<std::size_t>(r), BigInt(0));
    }

    int ncols() const { return static_cast<int>(cols.size()); }
    BigInt& at(int i, int j) { return cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; }
    const BigInt& at(int i, int j) const {
        return cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
};

// Floor division; cpp_int's operator/ truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Round-to-nearest division, halves toward +infinity.
inline BigInt round_div(const BigInt& a, const BigInt& b) {
    BigInt bb = b < 0 ? BigInt(-b) : b;
    BigInt aa = b < 0 ? BigInt(-a) : a;
    return floor_div(2 * aa + bb, 2 * bb);
}

struct HermiteNF {
    ColMatrix h;                 // m x n, column echelon
    ColMatrix u;                 // n x n unimodular, a * u = h
    std::vector<int> pivot_row;  // size rank, strictly increasing
    int rank = 0;

    int kernel_dim() const { return u.ncols() - rank; }
};

namespace detail {

// dst -= t * src, applied to h and u simultaneously.
inline void axpy_cols(ColMatrix& h, ColMatrix& u, int dst, int src, const BigInt& t) {
    if (t == 0) return;
    auto& hd = h.cols[static_cast<std::size_t>(dst)];
    auto& hs = h.cols[static_cast<std::size_t>(src)];
    for (std::size_t i = 0; i < hd.size(); ++i) hd[i] -= t * hs[i];
    auto& ud = u.cols[static_cast<std::size_t>(dst)];
    auto& us = u.cols[static_cast<std::size_t>(src)];
    for (std::size_t i = 0; i < ud.size(); ++i) ud[i] -= t * us[i];
}

inline void swap_cols(ColMatrix& h, ColMatrix& u, int a, int b) {
    if (a == b) return;
    std::swap(h.cols[static_cast<std::size_t>(a)], h.cols[static_cast<std::size_t>(b)]);
    std::swap(u.cols[static_cast<std::size_t>(a)], u.cols[static_cast<std::size_t>(b)]);
}

inline void negate_col(ColMatrix& h, ColMatrix& u, int j) {
    for (auto& v : h.cols[static_cast<std::size_t>(j)]) v = -v;
    for (auto& v : u.cols[static_cast<std::size_t>(j)]) v = -v;
}

}  // namespace detail

inline HermiteNF column_hermite(const ColMatrix& a) {
    HermiteNF nf;
    nf.h = a;
    const int n = a.ncols();
    nf.u = ColMatrix(n, n);
    for (int j = 0; j < n; ++j) nf.u.at(j, j) = 1;

    int r = 0;  // next pivot column
    for (int i = 0; i < a.rows && r < n; ++i) {
        // Euclid across columns >= r until row i has at most one nonzero there.
        for (;;) {
            int jmin = -1;
            for (int j = r; j < n; ++j) {
                const BigInt& v = nf.h.at(i, j);
                if (v == 0) continue;
                if (jmin < 0 || abs(v) < abs(nf.h.at(i, jmin))) jmin = j;
            }
            if (jmin < 0) break;  // row is zero past r
            bool cleared = true;
            for (int j = r; j < n; ++j) {
                if (j == jmin || nf.h.at(i, j) == 0) continue;
                BigInt t = nf.h.at(i, j) / nf.h.at(i, jmin);
                detail::axpy_cols(nf.h, nf.u, j, jmin, t);
                if (nf.h.at(i, j) != 0) cleared = false;
            }
            if (cleared) {
                detail::swap_cols(nf.h, nf.u, r, jmin);
                if (nf.h.at(i, r) < 0) detail::negate_col(nf.h, nf.u, r);
                // Reduce earlier columns in this pivot row into [0, pivot).
                for (int j = 0; j < r; ++j) {
                    BigInt t = floor_div(nf.h.at(i, j), nf.h.at(i, r));
                    detail::axpy_cols(nf.h, nf.u, j, r, t);
                }
                nf.pivot_row.push_back(i);
                ++r;
                break;
            }
        }
    }
    nf.rank = r;
    return nf;
}

// Solve A x = b exactly over the integers given A U = H: forward-substitute
// through the echelon columns, then map back through U.  Throws
// NoIntegerSolution when b is not in the integer column span.
inline std::vector<BigInt> hermite_solve(const HermiteNF& nf, const std::vector<BigInt>& b) {
    const int m = nf.h.rows;
    const int n = nf.h.ncols();
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("hermite_solve: length mismatch");
    std::vector<BigInt> residual = b;
    std::vector<BigInt> y(static_cast<std::size_t>(n), BigInt(0));
    for (int k = 0; k < nf.rank; ++k) {
        int pr = nf.pivot_row[static_cast<std::size_t>(k)];
        const BigInt& pivot = nf.h.at(pr, k);
        const BigInt& target = residual[static_cast<std::size_t>(pr)];
        if (target == 0) continue;
        if (target % pivot != 0)
            throw NoIntegerSolution("hermite_solve: pivot row " + std::to_string(pr) +
                                    " requires a non-integral coefficient");
        BigInt c = target / pivot;
        y[static_cast<std::size_t>(k)] = c;
        const auto& hcol = nf.h.cols[static_cast<std::size_t>(k)];
        for (int i = pr; i < m; ++i)
            residual[static_cast<std::size_t>(i)] -= c * hcol[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < m; ++i)
        if (residual[static_cast<std::size_t>(i)] != 0)
            throw NoIntegerSolution("hermite_solve: residual nonzero in row " + std::to_string(i));
    std::vector<BigInt> x(static_cast<std::size_t>(n), BigInt(0));
    for (int k = 0; k < nf.rank; ++k) {
        if (y[static_cast<std::size_t>(k)] == 0) continue;
        const auto& ucol = nf.u.cols[static_cast<std::size_t>(k)];
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] += y[static_cast<std::size_t>(k)] * ucol[static_cast<std::size_t>(j)];
    }
    return x;
}

struct KernelEchelon {
    ColMatrix basis;             // n x kernel_dim, column echelon
    std::vector<int> pivot_row;  // strictly increasing, one per column
};

// Kernel of A as the trailing columns of U, re-echelonized so that pivot
// rows increase and pivots are positive (a canonical lattice basis).
inline KernelEchelon kernel_basis(const HermiteNF& nf) {
    const int n = nf.h.ncols();
    ColMatrix k(n, nf.kernel_dim());
    for (int j = 0; j < nf.kernel_dim(); ++j)
        k.cols[static_cast<std::size_t>(j)] = nf.u.cols[static_cast<std::size_t>(nf.rank + j)];
    KernelEchelon out;
    if (k.ncols() == 0) {
        out.basis = ColMatrix(n, 0);
        return out;
    }
    HermiteNF knf = column_hermite(k);
    if (knf.rank != k.ncols())
        throw std::logic_error("kernel_basis: trailing U columns are dependent");
    ColMatrix b(n, knf.rank);
    for (int j = 0; j < knf.rank; ++j)
        b.cols[static_cast<std::size_t>(j)] = knf.h.cols[static_cast<std::size_t>(j)];
    out.basis = std::move(b);
    out.pivot_row = knf.pivot_row;
    return out;
}

// Matrix-vector product A x for a column-major A.
inline std::vector<BigInt> mat_vec(const ColMatrix& a, const std::vector<BigInt>& x) {
    if (static_cast<int>(x.size()) != a.ncols())
        throw std::invalid_argument("mat_vec: length mismatch");
    std::vector<BigInt> out(static_cast<std::size_t>(a.rows), BigInt(0));
    for (int j = 0; j < a.ncols(); ++j) {
        const BigInt& c = x[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        const auto& col = a.cols[static_cast<std::size_t>(j)];
        for (int i = 0; i < a.rows; ++i)
            out[static_cast<std::size_t>(i)] += c * col[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace bmweights
