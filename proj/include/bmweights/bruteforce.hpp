#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bmweights/field.hpp"

/* Exhaustive-search oracles.
 *
 * Everything here recomputes its answer from raw integer arithmetic, without
 * the closed-form routines of the main headers, so that the two paths can be
 * compared in tests.  All searches are tiny (desk-scale p, f) and run in a
 * fixed deterministic order.
 */

namespace bmweights {
namespace bruteforce {

inline long long modpow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
    }
    return r;
}

// All digit vectors gamma in [0, p-1]^len, excluding all-(p-1), with
// Sum gamma_i * p^(len-i) = c mod m.  Enumerated with gamma[len-1] fastest.
inline std::vector<std::vector<int>> digit_vectors_for(const FieldDatum& fd, int level,
                                                       long long c) {
    const int len = level == 1 ? fd.f : 2 * fd.f;
    const long long m = level == 1 ? fd.m1 : fd.m2;
    c %= m;
    if (c < 0) c += m;
    std::vector<long long> w(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = modpow(fd.p, len - i, m);
    std::vector<std::vector<int>> out;
    std::vector<int> g(static_cast<std::size_t>(len), 0);
    for (;;) {
        bool all_top = true;
        for (int v : g)
            if (v != fd.p - 1) { all_top = false; break; }
        if (!all_top) {
            long long acc = 0;
            for (int i = 0; i < len; ++i)
                acc = (acc + g[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)]) % m;
            if (acc == c) out.push_back(g);
        }
        int i = len - 1;
        while (i >= 0 && g[static_cast<std::size_t>(i)] == fd.p - 1) {
            g[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++g[static_cast<std::size_t>(i)];
    }
    return out;
}

struct TypeCounts {
    long long scalars = 0;
    long long principal_series = 0;
    long long cuspidal = 0;

    long long total() const { return scalars + principal_series + cuspidal; }

    friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

// Count tame types by direct orbit enumeration: unordered level-1 pairs and
// two-element Frobenius orbits of regular level-2 exponents.
inline TypeCounts count_tame_types(const FieldDatum& fd) {
    TypeCounts out;
    for (long long a = 0; a < fd.m1; ++a)
        for (long long b = a; b < fd.m1; ++b)
            (a == b ? out.scalars : out.principal_series) += 1;
    std::vector<char> seen(static_cast<std::size_t>(fd.m2), 0);
    for (long long c = 0; c < fd.m2; ++c) {
        if (seen[static_cast<std::size_t>(c)]) continue;
        long long conj = fd.q * c % fd.m2;
        if (conj == c) continue;  // Frobenius-fixed, not regular
        seen[static_cast<std::size_t>(c)] = 1;
        seen[static_cast<std::size_t>(conj)] = 1;
        out.cuspidal += 1;
    }
    return out;
}

// All integer vectors x with matrix * x = target, every entry in
// [-bound, bound], enumerated odometer-style (last coordinate fastest,
// each coordinate from -bound to bound).  matrix is row-major.
// Intended for very small column counts.
inline std::vector<std::vector<long long>> solve_box(
    const std::vector<std::vector<int>>& matrix, const std::vector<long long>& target,
    long long bound) {
    const int rows = static_cast<int>(matrix.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(static_cast<std::size_t>(cols), -bound);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            long long acc = 0;
            for (int j = 0; j < cols; ++j)
                acc += matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       x[static_cast<std::size_t>(j)];
            ok = acc == target[static_cast<std::size_t>(i)];
        }
        if (ok) out.push_back(x);
        int j = cols - 1;
        while (j >= 0 && x[static_cast<std::size_t>(j)] == bound) {
            x[static_cast<std::size_t>(j)] = -bound;
            --j;
        }
        if (j < 0) break;
        ++x[static_cast<std::size_t>(j)];
    }
    return out;
}

// All integer vectors x with matrix * x = target, at most max_support
// nonzero entries, each nonzero entry in [-bound, bound].  Support sets are
// visited in lexicographic order, values odometer-style.
inline std::vector<std::vector<long long>> solve_sparse(
    const std::vector<std::vector<int>>& matrix, const std::vector<long long>& target,
    long long bound, int max_support) {
    const int rows = static_cast<int>(matrix.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
    std::vector<std::vector<long long>> out;
    std::vector<int> support;

    auto try_values = [&](auto&& self, std::size_t k, std::vector<long long>& vals) -> void {
        if (k == support.size()) {
            for (int i = 0; i < rows; ++i) {
                long long acc = 0;
                for (std::size_t t = 0; t < support.size(); ++t)
                    acc += matrix[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(support[t])] * vals[t];
                if (acc != target[static_cast<std::size_t>(i)]) return;
            }
            std::vector<long long> x(static_cast<std::size_t>(cols), 0);
            for (std::size_t t = 0; t < support.size(); ++t)
                x[static_cast<std::size_t>(support[t])] = vals[t];
            out.push_back(std::move(x));
            return;
        }
        for (long long v = -bound; v <= bound; ++v) {
            if (v == 0) continue;  // zero would shrink the support set
            vals[k] = v;
            self(self, k + 1, vals);
        }
    };

    auto pick = [&](auto&& self, int start, int remaining) -> void {
        std::vector<long long> vals(support.size());
        try_values(try_values, 0, vals);
        if (remaining == 0) return;
        for (int j = start; j < cols; ++j) {
            support.push_back(j);
            self(self, j + 1, remaining - 1);
            support.pop_back();
        }
    };

    pick(pick, 0, max_support);
    return out;
}

}  // namespace bruteforce
}  // namespace bmweights
