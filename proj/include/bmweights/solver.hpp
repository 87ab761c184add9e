#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/hnf.hpp"
#include "bmweights/jh.hpp"
#include "bmweights/types.hpp"
#include "bmweights/weights.hpp"

/* The multiplicity matrix M and the inversion n_tau(sigma).
 *
 * M has one row per non-Steinberg weight sigma and one column per tame type
 * tau, with entry m_sigma(tau) in {0,1} (the reduction of a tame type is
 * multiplicity-free).  For a non-Steinberg weight w, solve_n finds integers
 * n_tau(w) with
 *
 *   Sum_tau n_tau(w) m_sigma(tau) = delta_{sigma,w}   for all sigma,
 *
 * i.e. an integer solution of M x = e_w.  Solutions are unique only up to
 * the integer kernel of M; the canonical representative is obtained by
 * reducing against the echelonized kernel basis, nearest-integer at each
 * kernel pivot, so that repeated runs and perturbed inputs normalize to the
 * same vector.
 */

namespace bmweights {

// Sparse coefficient vector indexed by position in the type enumeration.
using Coeffs = std::map<int, BigInt>;

struct DecompMatrix {
    FieldDatum fd;
    std::vector<SerreWeight> row_weights;  // non-Steinberg, enumeration order
    std::vector<TameType> col_types;       // enumeration order
    std::map<SerreWeight, int> row_index;
    std::vector<std::vector<int>> col_support;  // rows with entry 1, per column

    std::shared_ptr<const HermiteNF> hnf;
    std::shared_ptr<const KernelEchelon> kernel;

    explicit DecompMatrix(const FieldDatum& fd_) : fd(fd_) {}

    int nrows() const { return static_cast<int>(row_weights.size()); }
    int ncols() const { return static_cast<int>(col_types.size()); }

    int entry(int i, int j) const {
        for (int r : col_support[static_cast<std::size_t>(j)])
            if (r == i) return 1;
        return 0;
    }

    // M x for a sparse x; cost proportional to the support hit.
    std::vector<BigInt> apply(const Coeffs& x) const {
        std::vector<BigInt> out(static_cast<std::size_t>(nrows()), BigInt(0));
        for (const auto& [j, c] : x) {
            if (c == 0) continue;
            for (int r : col_support[static_cast<std::size_t>(j)])
                out[static_cast<std::size_t>(r)] += c;
        }
        return out;
    }
};

// Build M at the given field datum and factor it once; the factorization is
// shared by every subsequent solve.
inline DecompMatrix build_decomp_matrix(const FieldDatum& fd) {
    DecompMatrix m(fd);
    m.row_weights = enumerate_weights(fd, /*include_steinberg=*/false);
    m.col_types = enumerate_tame_types(fd);
    for (int i = 0; i < m.nrows(); ++i)
        m.row_index.emplace(m.row_weights[static_cast<std::size_t>(i)], i);

    ColMatrix a(m.nrows(), m.ncols());
    m.col_support.resize(static_cast<std::size_t>(m.ncols()));
    for (int j = 0; j < m.ncols(); ++j) {
        for (const JHFactor& fac : jh_set(fd, m.col_types[static_cast<std::size_t>(j)])) {
            auto it = m.row_index.find(fac.weight);
            if (it == m.row_index.end()) {
                if (!is_steinberg(fd, fac.weight))
                    throw IdentityViolation("build_decomp_matrix: factor weight not enumerated");
                continue;  // Steinberg factors fall outside the row space
            }
            m.col_support[static_cast<std::size_t>(j)].push_back(it->second);
            a.at(it->second, j) = 1;
        }
        std::sort(m.col_support[static_cast<std::size_t>(j)].begin(),
                  m.col_support[static_cast<std::size_t>(j)].end());
    }
    m.hnf = std::make_shared<const HermiteNF>(column_hermite(a));
    m.kernel = std::make_shared<const KernelEchelon>(kernel_basis(*m.hnf));
    return m;
}

struct NSolution {
    SerreWeight weight;
    Coeffs coeffs;
    std::shared_ptr<const KernelEchelon> kernel;  // shared with the matrix

    const KernelEchelon& kernel_lattice() const { return *kernel; }
};

namespace detail {

// Canonicalize x modulo the kernel lattice: sweep the echelon basis in pivot
// order, subtracting the nearest-integer multiple at each pivot row.  Each
// basis column has zeros above its pivot, so earlier normalizations stay
// intact and the result is independent of the input representative.
inline void reduce_by_kernel(std::vector<BigInt>& x, const KernelEchelon& k) {
    for (int j = 0; j < k.basis.ncols(); ++j) {
        int pr = k.pivot_row[static_cast<std::size_t>(j)];
        const auto& col = k.basis.cols[static_cast<std::size_t>(j)];
        BigInt t = round_div(x[static_cast<std::size_t>(pr)], col[static_cast<std::size_t>(pr)]);
        if (t == 0) continue;
        for (int i = pr; i < k.basis.rows; ++i)
            x[static_cast<std::size_t>(i)] -= t * col[static_cast<std::size_t>(i)];
    }
}

}  // namespace detail

// Integer coefficients n_tau(w) with M n = e_w, canonicalized modulo the
// kernel.  Throws SteinbergInput for Steinberg w and NoIntegerSolution when
// e_w is not in the integer column span.
inline NSolution solve_n(const DecompMatrix& m, const SerreWeight& w) {
    if (is_steinberg(m.fd, w))
        throw SteinbergInput("solve_n: Steinberg weights are outside the matrix rows");
    auto it = m.row_index.find(w);
    if (it == m.row_index.end())
        throw std::invalid_argument("solve_n: weight does not belong to this field datum");
    std::vector<BigInt> b(static_cast<std::size_t>(m.nrows()), BigInt(0));
    b[static_cast<std::size_t>(it->second)] = 1;
    std::vector<BigInt> x = hermite_solve(*m.hnf, b);
    detail::reduce_by_kernel(x, *m.kernel);
    NSolution sol;
    sol.weight = w;
    sol.kernel = m.kernel;
    for (int j = 0; j < m.ncols(); ++j)
        if (x[static_cast<std::size_t>(j)] != 0) sol.coeffs[j] = x[static_cast<std::size_t>(j)];
    return sol;
}

// Check Sum_tau n_tau(sigma) m_sigma'(tau) = delta_{sigma,sigma'} for all
// row weights sigma, sigma'; equivalently M n(sigma) = e_sigma.  Throws
// MissingSolution if a row weight has no entry in sols.
inline bool verify_orthogonality(const DecompMatrix& m,
                                 const std::map<SerreWeight, NSolution>& sols) {
    for (int i = 0; i < m.nrows(); ++i) {
        const SerreWeight& sigma = m.row_weights[static_cast<std::size_t>(i)];
        auto it = sols.find(sigma);
        if (it == sols.end())
            throw MissingSolution("verify_orthogonality: no solution supplied for a row weight");
        std::vector<BigInt> v = m.apply(it->second.coeffs);
        for (int r = 0; r < m.nrows(); ++r) {
            BigInt expect = (r == i) ? 1 : 0;
            if (v[static_cast<std::size_t>(r)] != expect) return false;
        }
    }
    return true;
}

}  // namespace bmweights
