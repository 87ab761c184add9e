#pragma once

#include <stdexcept>
#include <string>

namespace bmweights {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A digit lies outside [0, p-1], or a digit vector has the wrong length.
struct DigitRangeError : Error {
    using Error::Error;
};

// A level-2 character is fixed by Frobenius (eta = eta^q), so it does not
// define a cuspidal type.
struct RegularityError : Error {
    using Error::Error;
};

// A Steinberg weight was passed to an operation defined only for
// non-Steinberg weights.
struct SteinbergInput : Error {
    using Error::Error;
};

// The requested shape J is not a member of P_tau.
struct ShapeNotAdmissible : Error {
    using Error::Error;
};

// Internal consistency failure: the cuspidal twisting character failed to
// factor through the norm. Indicates a bug, not a user error.
struct NormFactorError : Error {
    using Error::Error;
};

// The linear system M.n = e_w has no integer solution. For decomposition
// matrices over the full tame-type list this would contradict the
// Grothendieck-group surjectivity the solver relies on, so tests treat it
// as a consistency failure.
struct NoIntegerSolution : Error {
    using Error::Error;
};

// A solution map is missing an entry required by a verification step.
struct MissingSolution : Error {
    using Error::Error;
};

// A cycle identity that must hold unconditionally failed. Carries a
// counterexample description; treated as a consistency failure.
struct IdentityViolation : Error {
    using Error::Error;
};

// Weight matching is implemented for niveau-1 inertial data only.
struct UnsupportedNiveau : Error {
    using Error::Error;
};

// A spec string ("ps:...", "w:...", "n1:...") failed to parse.
// `position` is the byte offset of the first offending character.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

}  // namespace bmweights
