#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/types.hpp"
#include "bmweights/weights.hpp"

/* Jordan-Holder factors of the mod-p reduction of a tame type.
 *
 * Factors are indexed by subsets J of Z/f'Z (shapes).  For cuspidal types
 * only subsets with i in J <=> i+f not in J occur; for scalar types only the
 * empty set.  The admissible shapes are further cut out by boundary
 * conditions on the digit vector gamma of eta/eta':
 *
 *   i-1 in J, i not in J  =>  gamma_i != p-1
 *   i-1 not in J, i in J  =>  gamma_i != 0
 *
 * For admissible J the factor's digit vectors are, with indices mod f',
 *
 *   i-1 in J:      s_i = p-1-gamma_i - [i in J^c],  t_i = gamma_i + [i in J^c]
 *   i-1 not in J:  s_i = gamma_i - [i in J],        t_i = 0
 *
 * In the principal series case the resulting weight is twisted by eta'.  In
 * the cuspidal case (s, t) is f-periodic and the level-2 twist
 * q*eta + Sum t_i e'_i factors through the norm; the factor is the descended
 * level-1 weight.
 */

namespace bmweights {

struct Shape {
    std::uint32_t mask = 0;  // bit i set iff i in J
    int length = 0;          // f'

    bool contains(int i) const {
        int r = i % length;
        if (r < 0) r += length;
        return (mask >> r) & 1u;
    }

    int size() const {
        int n = 0;
        for (int i = 0; i < length; ++i) n += static_cast<int>((mask >> i) & 1u);
        return n;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < length; ++i)
            if ((mask >> i) & 1u) out.push_back(i);
        return out;
    }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

// Shapes compatible with the symmetry class of the type, in ascending mask
// order: all 2^f subsets for principal series, the 2^f complementary-pair
// subsets for cuspidal, only the empty set for scalar.
inline std::vector<Shape> all_shapes(const FieldDatum& fd, const TameType& t) {
    std::vector<Shape> out;
    if (t.is_scalar()) {
        out.push_back(Shape{0, fd.f});
        return out;
    }
    if (!t.is_cuspidal()) {
        out.reserve(1u << fd.f);
        for (std::uint32_t m = 0; m < (1u << fd.f); ++m) out.push_back(Shape{m, fd.f});
        return out;
    }
    out.reserve(1u << fd.f);
    for (std::uint32_t low = 0; low < (1u << fd.f); ++low) {
        std::uint32_t high = ~low & ((1u << fd.f) - 1);  // i in J <=> i+f not in J
        out.push_back(Shape{low | (high << fd.f), 2 * fd.f});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline bool shape_admissible(const FieldDatum& fd, const TameType& t, const Shape& J) {
    if (J.length != t.f_prime()) return false;
    if (t.is_scalar()) return J.mask == 0;
    if (t.is_cuspidal()) {
        for (int i = 0; i < fd.f; ++i)
            if (J.contains(i) == J.contains(i + fd.f)) return false;
    }
    for (int i = 0; i < J.length; ++i) {
        bool prev = J.contains(i - 1);
        bool cur = J.contains(i);
        int g = t.gamma[static_cast<std::size_t>(i)];
        if (prev && !cur && g == fd.p - 1) return false;
        if (!prev && cur && g == 0) return false;
    }
    return true;
}

}  // namespace detail

// Admissible shapes of the type, in ascending mask order.  The reduction of
// the type is multiplicity-free with exactly these Jordan-Holder factors.
inline std::vector<Shape> p_tau(const FieldDatum& fd, const TameType& t) {
    std::vector<Shape> out;
    for (const Shape& J : all_shapes(fd, t))
        if (detail::shape_admissible(fd, t, J)) out.push_back(J);
    return out;
}

struct JHFactor {
    Shape shape;
    SerreWeight weight;
    DigitVector s_full;  // length f', the pre-descent digit vectors
    DigitVector t_full;

    friend bool operator==(const JHFactor&, const JHFactor&) = default;
};

// The Jordan-Holder factor of the type's reduction at an admissible shape.
inline JHFactor jh_factor(const FieldDatum& fd, const TameType& t, const Shape& J) {
    if (!detail::shape_admissible(fd, t, J))
        throw ShapeNotAdmissible("jh_factor: shape is not admissible for this type");
    const int n = t.f_prime();
    DigitVector s(static_cast<std::size_t>(n)), tv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool prev = J.contains(i - 1);
        int g = t.gamma[static_cast<std::size_t>(i)];
        if (prev) {
            int comp = J.contains(i) ? 0 : 1;  // [i in J^c]
            s[static_cast<std::size_t>(i)] = fd.p - 1 - g - comp;
            tv[static_cast<std::size_t>(i)] = g + comp;
        } else {
            s[static_cast<std::size_t>(i)] = g - (J.contains(i) ? 1 : 0);
            tv[static_cast<std::size_t>(i)] = 0;
        }
    }
    JHFactor out;
    out.shape = J;
    out.s_full = s;
    out.t_full = tv;
    if (!t.is_cuspidal()) {
        out.weight = twist_weight(fd, weight_from_st(fd, s, tv), t.eta_prime);
        return out;
    }
    // Cuspidal: s must be f-periodic and the level-2 twist must factor
    // through the norm; both hold for every admissible shape.
    for (int i = 0; i < fd.f; ++i)
        if (s[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(i + fd.f)])
            throw IdentityViolation("jh_factor: cuspidal s-vector is not f-periodic");
    long long twist2 = fd.q * t.eta.value % fd.m2;
    for (int i = 0; i < 2 * fd.f; ++i)
        twist2 = (twist2 + tv[static_cast<std::size_t>(i)] * fundamental_exponent(fd, i, 2).value) % fd.m2;
    CharExponent theta = descend_through_norm(fd, CharExponent{twist2, 2});
    DigitVector s_low(s.begin(), s.begin() + fd.f);
    SerreWeight w;
    w.s = s_low;
    w.twist = theta;
    out.weight = w;
    return out;
}

// All Jordan-Holder factors, one per admissible shape, in shape order.
inline std::vector<JHFactor> jh_set(const FieldDatum& fd, const TameType& t) {
    std::vector<JHFactor> out;
    for (const Shape& J : p_tau(fd, t)) out.push_back(jh_factor(fd, t, J));
    return out;
}

// Multiplicity of the weight in the type's reduction; always 0 or 1.
inline int m_multiplicity(const FieldDatum& fd, const TameType& t, const SerreWeight& w) {
    for (const JHFactor& fac : jh_set(fd, t))
        if (fac.weight == w) return 1;
    return 0;
}

}  // namespace bmweights
