#pragma once

#include <map>
#include <vector>

#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/jh.hpp"
#include "bmweights/solver.hpp"
#include "bmweights/types.hpp"
#include "bmweights/weights.hpp"

/* Formal integer combinations of irreducible components.
 *
 * Two disjoint bases: Z-side components are indexed by non-Steinberg
 * weights; X-side components by all weights (Steinberg included).  A cycle
 * stores its basis kind and a sparse coefficient map with no zero entries;
 * arithmetic across different bases is rejected.
 *
 * The cycle of a tame type on the Z side is Z(tau) = Sum_{J in P_tau}
 * [sigma(tau)_J].  The inversion coefficients n_tau(w) recover the single
 * component [w] as Sum_tau n_tau(w) Z(tau); bm_cycle enforces that equality.
 *
 * On the X side the analogue of a non-Steinberg [w] is [X_w]; for a
 * Steinberg twist chi (x) St it is [X_chi] + [X_{chi (x) St}].  The X-side
 * cycle of a type's special fibre is Sum_sigma m_sigma(tau) [X_sigma].
 */

namespace bmweights {

enum class BasisKind { ZSide, XSide };

struct Cycle {
    BasisKind basis = BasisKind::ZSide;
    long long p = 0;  // carried so Z-side insertions can reject Steinberg labels
    std::map<SerreWeight, BigInt> coeffs;

    Cycle() = default;
    Cycle(const FieldDatum& fd, BasisKind b) : basis(b), p(fd.p) {}

    bool is_zero() const { return coeffs.empty(); }

    void add_term(const SerreWeight& w, const BigInt& c) {
        if (c == 0) return;
        if (basis == BasisKind::ZSide) {
            bool st = true;
            for (int v : w.s)
                if (v != p - 1) { st = false; break; }
            if (st)
                throw SteinbergInput("Cycle::add_term: Steinberg label on the Z side");
        }
        auto it = coeffs.find(w);
        if (it == coeffs.end()) {
            coeffs.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Cycle& operator+=(const Cycle& o) {
        if (basis != o.basis)
            throw std::invalid_argument("Cycle: mixed-basis arithmetic");
        for (const auto& [w, c] : o.coeffs) add_term(w, c);
        return *this;
    }

    Cycle& operator-=(const Cycle& o) {
        if (basis != o.basis)
            throw std::invalid_argument("Cycle: mixed-basis arithmetic");
        for (const auto& [w, c] : o.coeffs) add_term(w, -c);
        return *this;
    }

    Cycle& operator*=(const BigInt& t) {
        if (t == 0) {
            coeffs.clear();
            return *this;
        }
        for (auto& [w, c] : coeffs) c *= t;
        return *this;
    }

    friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
    friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
    friend Cycle operator*(const BigInt& t, Cycle a) { return a *= t; }

    friend bool operator==(const Cycle& a, const Cycle& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }

    // All coefficients nonnegative.
    bool is_effective() const {
        for (const auto& [w, c] : coeffs)
            if (c < 0) return false;
        return true;
    }

    // All coefficients in {0, 1}; reduced unions of components.
    bool is_reduced_effective() const {
        for (const auto& [w, c] : coeffs)
            if (c != 1) return false;
        return true;
    }
};

// The single-component cycle [w].
inline Cycle unit_cycle(const FieldDatum& fd, BasisKind basis, const SerreWeight& w) {
    Cycle z(fd, basis);
    z.add_term(w, 1);
    return z;
}

// Z-side cycle of a tame type: one component per admissible shape.
inline Cycle z_of_type(const FieldDatum& fd, const TameType& t) {
    Cycle z(fd, BasisKind::ZSide);
    for (const JHFactor& fac : jh_set(fd, t)) z.add_term(fac.weight, 1);
    return z;
}

namespace detail {

inline Cycle bm_cycle_unchecked(const DecompMatrix& m, const NSolution& sol) {
    Cycle z(m.fd, BasisKind::ZSide);
    for (const auto& [j, c] : sol.coeffs)
        z += c * z_of_type(m.fd, m.col_types[static_cast<std::size_t>(j)]);
    return z;
}

}  // namespace detail

// Sum_tau n_tau(w) Z(tau); checked against the defining identity, so the
// return value is always exactly [w].  Throws IdentityViolation otherwise.
inline Cycle bm_cycle(const DecompMatrix& m, const SerreWeight& w, const NSolution& sol) {
    if (is_steinberg(m.fd, w))
        throw SteinbergInput("bm_cycle: Steinberg weights have no Z-side component");
    Cycle z = detail::bm_cycle_unchecked(m, sol);
    if (z != unit_cycle(m.fd, BasisKind::ZSide, w))
        throw IdentityViolation("bm_cycle: Sum n_tau Z(tau) differs from [w]");
    return z;
}

// Does Z(tau) = Sum_{sigma in JH(tau)} Sum_tau' n_tau'(sigma) Z(tau') hold
// with the supplied solutions?  False signals a non-solving coefficient
// vector.  Throws MissingSolution when a factor weight of tau has no entry.
inline bool verify_z_identity(const DecompMatrix& m, const TameType& t,
                              const std::map<SerreWeight, NSolution>& sols) {
    Cycle lhs = z_of_type(m.fd, t);
    Cycle rhs(m.fd, BasisKind::ZSide);
    for (const JHFactor& fac : jh_set(m.fd, t)) {
        auto it = sols.find(fac.weight);
        if (it == sols.end())
            throw MissingSolution("verify_z_identity: no solution for a factor weight");
        rhs += detail::bm_cycle_unchecked(m, it->second);
    }
    return lhs == rhs;
}

// X-side stand-in for a weight: [X_w] for non-Steinberg w, and
// [X_chi] + [X_{chi (x) St}] for the Steinberg twist chi (x) St.
inline Cycle x_cycle_for_weight(const FieldDatum& fd, const SerreWeight& w) {
    Cycle z(fd, BasisKind::XSide);
    if (!is_steinberg(fd, w)) {
        z.add_term(w, 1);
        return z;
    }
    SerreWeight chi;
    chi.s.assign(static_cast<std::size_t>(fd.f), 0);
    chi.twist = w.twist;
    z.add_term(chi, 1);
    z.add_term(w, 1);
    return z;
}

// X-side cycle of the special fibre attached to a tame type:
// Sum_sigma m_sigma(tau) [X_sigma].  Always reduced and effective.
inline Cycle x_special_fibre_cycle(const FieldDatum& fd, const TameType& t) {
    Cycle z(fd, BasisKind::XSide);
    for (const JHFactor& fac : jh_set(fd, t)) z.add_term(fac.weight, 1);
    if (!z.is_reduced_effective())
        throw IdentityViolation("x_special_fibre_cycle: multiplicity above one");
    return z;
}

// Semisimplification locus for a Steinberg twist chi (x) St on the X side.
inline Cycle x_ss_steinberg_cycle(const FieldDatum& fd, const CharExponent& chi) {
    if (chi.level != 1)
        throw std::invalid_argument("x_ss_steinberg_cycle: level-1 twist required");
    SerreWeight st;
    st.s.assign(static_cast<std::size_t>(fd.f), static_cast<int>(fd.p - 1));
    st.twist = fd.reduce(chi.value, 1);
    return x_cycle_for_weight(fd, st);
}

// Inclusion of bases: relabel a Z-side cycle as an X-side cycle.
inline Cycle to_x_basis(const Cycle& z) {
    if (z.basis == BasisKind::XSide) return z;
    Cycle out;
    out.basis = BasisKind::XSide;
    out.p = z.p;
    out.coeffs = z.coeffs;
    return out;
}

}  // namespace bmweights
