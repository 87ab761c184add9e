#pragma once

#include <vector>

#include "bmweights/cycles.hpp"
#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/jh.hpp"
#include "bmweights/types.hpp"
#include "bmweights/weights.hpp"

/* Inertial data of reducible mod-p Galois representations and the weights
 * they lie on.
 *
 * A niveau-1 datum records the tame characters on the sub and the quotient
 * (as level-1 exponents) plus a ramification flag.  The flag distinguishes
 * peu and tres ramifiee only when sub/quot is cyclotomic, i.e. when
 * sub - quot equals the cyclotomic exponent; otherwise it must be
 * NotApplicable.
 *
 * A non-Steinberg weight w with digits (s, twist) carries the datum
 *
 *   sub  = Sum s_j e_j + twist,   quot = twist - cyc,
 *
 * with flag Peu when that ratio is cyclotomic; the ratio is sub - quot =
 * Sum s_j e_j + cyc, so this happens exactly when Sum s_j e_j vanishes mod
 * m1, i.e. for the all-zero s-vector among non-Steinberg weights.  Tres
 * ramifiee representations lie on no weight's smooth locus, so they match
 * nothing here.
 *
 * Niveau-2 (irreducible) data can be stored but matching rejects them.
 */

namespace bmweights {

enum class RamFlag { Peu, Tres, NotApplicable };

struct InertialDatum {
    int niveau = 1;
    CharExponent sub_exp;   // level 1 for niveau 1; level 2 for niveau 2
    CharExponent quot_exp;  // unused for niveau 2
    RamFlag ram_flag = RamFlag::NotApplicable;

    friend bool operator==(const InertialDatum&, const InertialDatum&) = default;
};

// Is sub/quot the cyclotomic character?
inline bool datum_ratio_cyclotomic(const FieldDatum& fd, const InertialDatum& d) {
    if (d.niveau != 1) return false;
    return fd.reduce(d.sub_exp.value - d.quot_exp.value, 1) == cyclotomic_exponent(fd);
}

// Niveau-1 datum with the flag validated against the sub/quot ratio.
inline InertialDatum make_datum(const FieldDatum& fd, const CharExponent& sub,
                                const CharExponent& quot, RamFlag flag) {
    if (sub.level != 1 || quot.level != 1)
        throw std::invalid_argument("make_datum: level-1 exponents required");
    InertialDatum d;
    d.niveau = 1;
    d.sub_exp = fd.reduce(sub.value, 1);
    d.quot_exp = fd.reduce(quot.value, 1);
    d.ram_flag = flag;
    bool cyc = datum_ratio_cyclotomic(fd, d);
    if (cyc && flag == RamFlag::NotApplicable)
        throw std::invalid_argument("make_datum: cyclotomic ratio requires peu or tres");
    if (!cyc && flag != RamFlag::NotApplicable)
        throw std::invalid_argument("make_datum: ramification flag requires a cyclotomic ratio");
    return d;
}

// The datum carried by the smooth locus of a non-Steinberg weight.
inline InertialDatum datum_for_weight(const FieldDatum& fd, const SerreWeight& w) {
    if (is_steinberg(fd, w))
        throw SteinbergInput("datum_for_weight: Steinberg weights carry no niveau-1 datum");
    long long s_exp = 0;
    for (int j = 0; j < fd.f; ++j)
        s_exp = (s_exp + w.s[static_cast<std::size_t>(j)] * fundamental_exponent(fd, j, 1).value) % fd.m1;
    InertialDatum d;
    d.niveau = 1;
    d.sub_exp = fd.reduce(s_exp + w.twist.value, 1);
    d.quot_exp = fd.reduce(w.twist.value - cyclotomic_exponent(fd).value, 1);
    d.ram_flag = datum_ratio_cyclotomic(fd, d) ? RamFlag::Peu : RamFlag::NotApplicable;
    return d;
}

enum class MatchMode { Ordered, Unordered };

// All non-Steinberg weights whose datum matches d.  Ordered mode compares
// (sub, quot, flag) exactly; Unordered also accepts the swapped pair, for
// probing representations given without a chosen sub/quot order.  Tres
// ramifiee data match nothing.  Niveau 2 is rejected.
inline std::vector<SerreWeight> match_weights(const FieldDatum& fd, const InertialDatum& d,
                                              MatchMode mode = MatchMode::Ordered) {
    if (d.niveau != 1)
        throw UnsupportedNiveau("match_weights: only niveau-1 data are matchable");
    std::vector<SerreWeight> out;
    for (const SerreWeight& w : enumerate_weights(fd, /*include_steinberg=*/false)) {
        InertialDatum dw = datum_for_weight(fd, w);
        bool hit = dw.sub_exp == d.sub_exp && dw.quot_exp == d.quot_exp &&
                   dw.ram_flag == d.ram_flag;
        if (!hit && mode == MatchMode::Unordered)
            hit = dw.sub_exp == d.quot_exp && dw.quot_exp == d.sub_exp &&
                  dw.ram_flag == d.ram_flag;
        if (hit) out.push_back(w);
    }
    return out;
}

// Does some weight of the datum appear in the reduction of the type?
// Equivalently: does the representation admit a potentially Barsotti-Tate
// lift of that tame type.
inline bool has_pbt_lift_of_type(const FieldDatum& fd, const InertialDatum& d,
                                 const TameType& t, MatchMode mode = MatchMode::Ordered) {
    std::vector<JHFactor> jh = jh_set(fd, t);
    for (const SerreWeight& w : match_weights(fd, d, mode)) {
        for (const JHFactor& fac : jh)
            if (fac.weight == w) return true;
    }
    return false;
}

// Z-side cycle of the components whose smooth locus contains the datum.
inline Cycle components_through(const FieldDatum& fd, const InertialDatum& d,
                                MatchMode mode = MatchMode::Ordered) {
    Cycle z(fd, BasisKind::ZSide);
    for (const SerreWeight& w : match_weights(fd, d, mode)) z.add_term(w, 1);
    return z;
}

}  // namespace bmweights
