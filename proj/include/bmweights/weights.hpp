#pragma once

#include <compare>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"

/* Serre weights for GL2(k): irreducible mod-p representations
 *
 *   (x)_{j=0}^{f-1} (det^{t_j} Sym^{s_j} k^2)^{Frob^j}
 *
 * with all s_j in [0, p-1].  Only the sum Sum t_j e_j mod m1 matters, so a
 * weight is stored as the s-vector plus a single level-1 twist exponent.
 * The weight is Steinberg when every s_j equals p-1.
 */

namespace bmweights {

struct SerreWeight {
    std::vector<int> s;  // f entries, each in [0, p-1]
    CharExponent twist;  // level 1

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
    friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;
};

// Build a weight from digit vectors s, t of length f; the t-vector is
// collapsed to its exponent Sum t_j e_j mod m1.
inline SerreWeight weight_from_st(const FieldDatum& fd, const DigitVector& s,
                                  const DigitVector& t) {
    if (static_cast<int>(s.size()) != fd.f || static_cast<int>(t.size()) != fd.f)
        throw DigitRangeError("weight_from_st: s and t must have length f");
    for (int v : s)
        if (v < 0 || v >= fd.p)
            throw DigitRangeError("weight_from_st: s-digit out of [0, p-1]");
    SerreWeight w;
    w.s = s;
    w.twist = exponent_of_digits(fd, t);  // validates t-digits
    return w;
}

inline bool is_steinberg(const FieldDatum& fd, const SerreWeight& w) {
    for (int v : w.s)
        if (v != fd.p - 1) return false;
    return true;
}

// Twist by det^c: s is unchanged, the twist exponent shifts by c.
inline SerreWeight twist_weight(const FieldDatum& fd, const SerreWeight& w,
                                const CharExponent& c) {
    if (c.level != 1) throw std::invalid_argument("twist_weight: level-1 exponent required");
    SerreWeight out = w;
    out.twist = fd.reduce(w.twist.value + c.value, 1);
    return out;
}

inline long long weight_dim(const SerreWeight& w) {
    long long d = 1;
    for (int v : w.s) d *= v + 1;
    return d;
}

// All weights in a fixed deterministic order: s-vectors lexicographically
// (s[0] most significant), twists ascending within each s-vector.  There are
// q * m1 weights in total, (q-1) * m1 of them non-Steinberg.
inline std::vector<SerreWeight> enumerate_weights(const FieldDatum& fd,
                                                  bool include_steinberg = true) {
    std::vector<SerreWeight> out;
    out.reserve(static_cast<std::size_t>((fd.q - (include_steinberg ? 0 : 1)) * fd.m1));
    std::vector<int> s(static_cast<std::size_t>(fd.f), 0);
    for (long long v = 0; v < fd.q; ++v) {
        long long rem = v;
        for (int j = fd.f - 1; j >= 0; --j) {
            s[static_cast<std::size_t>(j)] = static_cast<int>(rem % fd.p);
            rem /= fd.p;
        }
        if (!include_steinberg && v == fd.q - 1) continue;  // all digits p-1
        for (long long c = 0; c < fd.m1; ++c) {
            SerreWeight w;
            w.s = s;
            w.twist = CharExponent{c, 1};
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace bmweights
