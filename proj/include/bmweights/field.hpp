#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmweights/errors.hpp"

/* Arithmetic context for a p-adic field and exponent arithmetic for
 * characters of the residue field and its quadratic extension.
 *
 * Conventions
 * -----------
 * k is the residue field, of cardinality q = p^f; l is its quadratic
 * extension, of cardinality q^2. Multiplicative characters are stored as
 * exponents with respect to a fixed embedding sigma_0 (resp. its fixed
 * extension sigma'_0 to l):
 *
 *   level 1:  a character of k^x is sigma_0^c,  c taken mod m1 = q-1
 *   level 2:  a character of l^x is sigma'_0^c, c taken mod m2 = q^2-1
 *
 * The embeddings sigma_i are indexed so that sigma_{i+1}^p = sigma_i, which
 * on exponents means the fundamental character omega_{sigma_i} has exponent
 *
 *   e_i  = p^(f-i)  mod m1   (level 1, 0 <= i < f,  e_0 = 1)
 *   e'_i = p^(2f-i) mod m2   (level 2, 0 <= i < 2f, e'_0 = 1)
 *
 * so that p*e_{i+1} == e_i holds cyclically. Digit vectors write a residue c
 * as sum_i gamma_i * e_i with gamma_i in [0, p-1]; every residue has exactly
 * one such representation except c == 0, which has two (all-0 and all-(p-1));
 * the canonical form is all-0.
 *
 * The norm l^x -> k^x raises exponents by q+1: a level-2 exponent c is a
 * norm pullback iff (q+1) | c, and then descends to the level-1 exponent
 * c/(q+1). The mod-p cyclotomic character restricted to inertia is
 * (prod_i omega_{sigma_i})^e, i.e. has exponent e * sum_i e_i mod m1.
 */

namespace bmweights {

// Exponent of a multiplicative character, reduced to [0, modulus).
// level 1: modulus m1 = p^f - 1; level 2: modulus m2 = p^{2f} - 1.
struct CharExponent {
    long long value = 0;
    int level = 1;

    friend bool operator==(const CharExponent&, const CharExponent&) = default;
    friend auto operator<=>(const CharExponent&, const CharExponent&) = default;
};

// Digit vector with entries in [0, p-1]; length f (level 1) or 2f (level 2).
using DigitVector = std::vector<int>;

struct FieldDatum {
    long long p = 3;  // residue characteristic, prime > 2
    int f = 1;        // residue degree
    int e = 1;        // ramification index
    long long q = 3;  // p^f
    long long m1 = 2; // q - 1
    long long m2 = 8; // q^2 - 1

    FieldDatum(long long p_, int f_, int e_ = 1) : p(p_), f(f_), e(e_) {
        if (p <= 2 || !is_prime(p))
            throw std::invalid_argument("FieldDatum: p must be a prime > 2, got " + std::to_string(p));
        if (f < 1)
            throw std::invalid_argument("FieldDatum: f must be >= 1, got " + std::to_string(f));
        if (e < 1)
            throw std::invalid_argument("FieldDatum: e must be >= 1, got " + std::to_string(e));
        // Exponent products (p-1)*m2 must fit in a signed 64-bit value;
        // capping q at 2^15 keeps every intermediate safely in range.
        long long lim = (1LL << 15);
        q = 1;
        for (int i = 0; i < f; ++i) {
            if (q > lim / p)
                throw std::invalid_argument("FieldDatum: p^f too large for exact 64-bit arithmetic (q <= 32768)");
            q *= p;
        }
        m1 = q - 1;
        m2 = q * q - 1;
    }

    friend bool operator==(const FieldDatum&, const FieldDatum&) = default;

    long long modulus(int level) const {
        if (level == 1) return m1;
        if (level == 2) return m2;
        throw std::invalid_argument("level must be 1 or 2");
    }

    int length(int level) const { return level == 1 ? f : 2 * f; }

    // Canonical residue in [0, modulus) of a possibly negative value.
    CharExponent reduce(long long v, int level) const {
        long long m = modulus(level);
        long long r = v % m;
        if (r < 0) r += m;
        return CharExponent{r, level};
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

// Exponent e_i of the i-th fundamental character (level 1), or e'_i (level 2).
inline CharExponent fundamental_exponent(const FieldDatum& fd, int i, int level) {
    int len = fd.length(level);
    if (i < 0 || i >= len)
        throw std::out_of_range("fundamental_exponent: index " + std::to_string(i) +
                                " out of range [0," + std::to_string(len) + ")");
    long long m = fd.modulus(level);
    // p^(len - i) mod m; for i = 0 this is p^len == 1 (mod m).
    long long r = 1;
    for (int j = 0; j < len - i; ++j) r = (r * fd.p) % m;
    return CharExponent{r, level};
}

// The unique digit vector gamma, not all p-1, with sum_i gamma_i * e_i == c.
// For c == 0 returns the all-zero vector.
//
// Since e_i = p^(-i) mod m, the digits are a cyclic permutation of the
// ordinary base-p digits of the canonical representative: gamma_i = d_{-i}.
inline DigitVector digits_of(const FieldDatum& fd, const CharExponent& c) {
    int len = fd.length(c.level);
    long long m = fd.modulus(c.level);
    long long v = ((c.value % m) + m) % m;
    std::vector<int> base(len, 0);
    for (int j = 0; j < len; ++j) {
        base[j] = static_cast<int>(v % fd.p);
        v /= fd.p;
    }
    DigitVector gamma(len, 0);
    for (int i = 0; i < len; ++i) gamma[i] = base[(len - i) % len];
    return gamma;
}

// Inverse of digits_of: sum_i d_i * e_i mod modulus. Level inferred from the
// vector length (f -> level 1, 2f -> level 2).
inline CharExponent exponent_of_digits(const FieldDatum& fd, const DigitVector& d) {
    int level;
    if (static_cast<int>(d.size()) == fd.f)
        level = 1;
    else if (static_cast<int>(d.size()) == 2 * fd.f)
        level = 2;
    else
        throw DigitRangeError("exponent_of_digits: digit vector length " + std::to_string(d.size()) +
                              " is neither f nor 2f");
    long long m = fd.modulus(level);
    long long acc = 0;
    bool all_top = true;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        if (d[i] < 0 || d[i] >= fd.p)
            throw DigitRangeError("exponent_of_digits: digit " + std::to_string(d[i]) +
                                  " at index " + std::to_string(i) + " outside [0,p-1]");
        if (d[i] != fd.p - 1) all_top = false;
        acc = (acc + d[i] * fundamental_exponent(fd, i, level).value) % m;
    }
    if (all_top)
        throw DigitRangeError(
            "exponent_of_digits: all-(p-1) is the non-canonical representative of 0");
    return CharExponent{acc, level};
}

// Exponent of the mod-p cyclotomic character restricted to inertia:
// e * sum_{i=0}^{f-1} e_i mod m1.
inline CharExponent cyclotomic_exponent(const FieldDatum& fd) {
    long long acc = 0;
    for (int i = 0; i < fd.f; ++i)
        acc = (acc + fundamental_exponent(fd, i, 1).value) % fd.m1;
    return fd.reduce(acc * fd.e, 1);
}

// A level-2 exponent is a norm pullback iff it is divisible by q+1.
inline bool factors_through_norm(const FieldDatum& fd, const CharExponent& c) {
    if (c.level != 2) throw std::invalid_argument("factors_through_norm: level-2 exponent required");
    long long v = ((c.value % fd.m2) + fd.m2) % fd.m2;
    return v % (fd.q + 1) == 0;
}

// The level-1 exponent theta with theta o N = the given level-2 character.
// Throws NormFactorError if the character is not a norm pullback.
inline CharExponent descend_through_norm(const FieldDatum& fd, const CharExponent& c) {
    if (!factors_through_norm(fd, c))
        throw NormFactorError("descend_through_norm: exponent " + std::to_string(c.value) +
                              " not divisible by q+1 = " + std::to_string(fd.q + 1));
    long long v = ((c.value % fd.m2) + fd.m2) % fd.m2;
    return CharExponent{v / (fd.q + 1), 1};
}

// The level-2 exponent of a level-1 character pulled back through the norm.
inline CharExponent inflate_through_norm(const FieldDatum& fd, const CharExponent& c) {
    if (c.level != 1) throw std::invalid_argument("inflate_through_norm: level-1 exponent required");
    return fd.reduce(c.value * (fd.q + 1), 2);
}

}  // namespace bmweights
