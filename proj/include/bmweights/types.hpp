#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"

/* Two-dimensional tame inertial types tau = eta (+) eta'.
 *
 * Principal series: eta, eta' both level 1; scalar when eta = eta'.
 * Cuspidal: eta level 2 and regular (eta != eta^q), eta' = eta^q.
 *
 * gamma is the canonical digit vector of eta/eta', of length f for
 * principal series and scalar types and 2f for cuspidal types; it is the
 * all-zero vector exactly for scalar types.
 *
 * Canonical forms: principal series pairs are unordered, stored with
 * eta <= eta'; cuspidal types are Frobenius orbits {c, qc}, stored with the
 * smaller representative as eta.
 */

namespace bmweights {

enum class TypeKind { Scalar, PrincipalSeries, Cuspidal };

struct TameType {
    TypeKind kind = TypeKind::Scalar;
    CharExponent eta;
    CharExponent eta_prime;
    DigitVector gamma;

    bool is_scalar() const { return kind == TypeKind::Scalar; }
    bool is_cuspidal() const { return kind == TypeKind::Cuspidal; }

    // f' = f for principal series and scalar types, 2f for cuspidal.
    int f_prime() const { return static_cast<int>(gamma.size()); }

    friend bool operator==(const TameType&, const TameType&) = default;
    friend auto operator<=>(const TameType&, const TameType&) = default;
};

// Principal series type on the unordered pair {a, b}; scalar when a == b.
inline TameType make_principal_series(const FieldDatum& fd, const CharExponent& a,
                                      const CharExponent& b) {
    if (a.level != 1 || b.level != 1)
        throw std::invalid_argument("make_principal_series: level-1 exponents required");
    CharExponent lo = fd.reduce(a.value, 1);
    CharExponent hi = fd.reduce(b.value, 1);
    if (hi.value < lo.value) std::swap(lo, hi);
    TameType t;
    t.kind = (lo == hi) ? TypeKind::Scalar : TypeKind::PrincipalSeries;
    t.eta = lo;
    t.eta_prime = hi;
    t.gamma = digits_of(fd, fd.reduce(lo.value - hi.value, 1));
    return t;
}

// As make_principal_series but keeping the given order of (eta, eta').
// The canonical constructor is what enumeration uses; this variant exists so
// that order-invariance of the Jordan-Holder output can be tested.
inline TameType make_principal_series_ordered(const FieldDatum& fd, const CharExponent& a,
                                              const CharExponent& b) {
    if (a.level != 1 || b.level != 1)
        throw std::invalid_argument("make_principal_series_ordered: level-1 exponents required");
    TameType t;
    CharExponent ra = fd.reduce(a.value, 1);
    CharExponent rb = fd.reduce(b.value, 1);
    t.kind = (ra == rb) ? TypeKind::Scalar : TypeKind::PrincipalSeries;
    t.eta = ra;
    t.eta_prime = rb;
    t.gamma = digits_of(fd, fd.reduce(ra.value - rb.value, 1));
    return t;
}

// Cuspidal type attached to a regular level-2 character; the stored eta is
// the smaller element of the Frobenius orbit {c, qc}.
inline TameType make_cuspidal(const FieldDatum& fd, const CharExponent& eta) {
    if (eta.level != 2)
        throw std::invalid_argument("make_cuspidal: level-2 exponent required");
    long long c = fd.reduce(eta.value, 2).value;
    if ((fd.q - 1) * c % fd.m2 == 0)
        throw RegularityError("make_cuspidal: exponent " + std::to_string(c) +
                              " is Frobenius-fixed (eta = eta^q), not cuspidal");
    long long conj = fd.q * c % fd.m2;
    long long canon = std::min(c, conj);
    TameType t;
    t.kind = TypeKind::Cuspidal;
    t.eta = CharExponent{canon, 2};
    t.eta_prime = CharExponent{fd.q * canon % fd.m2, 2};
    t.gamma = digits_of(fd, fd.reduce((1 - fd.q) * canon, 2));
    return t;
}

// Dimension of the characteristic-zero representation attached to the type:
// q+1 for non-scalar principal series, q-1 for cuspidal, 1 for scalar.
inline long long type_dimension(const FieldDatum& fd, const TameType& t) {
    switch (t.kind) {
        case TypeKind::Scalar: return 1;
        case TypeKind::PrincipalSeries: return fd.q + 1;
        case TypeKind::Cuspidal: return fd.q - 1;
    }
    throw std::logic_error("type_dimension: bad kind");
}

// All tame types in a fixed deterministic order: scalars by exponent, then
// non-scalar principal series by (eta, eta'), then cuspidal types by orbit
// representative. Counts: m1 scalars, m1(m1-1)/2 principal series, and
// q(q-1)/2 cuspidal orbits.
inline std::vector<TameType> enumerate_tame_types(const FieldDatum& fd) {
    std::vector<TameType> out;
    out.reserve(static_cast<std::size_t>(fd.m1 + fd.m1 * (fd.m1 - 1) / 2 + fd.q * (fd.q - 1) / 2));
    for (long long a = 0; a < fd.m1; ++a)
        out.push_back(make_principal_series(fd, CharExponent{a, 1}, CharExponent{a, 1}));
    for (long long a = 0; a < fd.m1; ++a)
        for (long long b = a + 1; b < fd.m1; ++b)
            out.push_back(make_principal_series(fd, CharExponent{a, 1}, CharExponent{b, 1}));
    for (long long c = 1; c < fd.m2; ++c) {
        if ((fd.q - 1) * c % fd.m2 == 0) continue;  // not regular
        if (fd.q * c % fd.m2 < c) continue;         // orbit already listed
        out.push_back(make_cuspidal(fd, CharExponent{c, 2}));
    }
    return out;
}

}  // namespace bmweights
