#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace shapegeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pairwise distance vanished. Pair indices are 1-based, matching body labels.
struct CollisionError : Error {
    CollisionError(int i, int j, const std::string& what)
        : Error(what), pair{i, j} {}
    std::pair<int, int> pair;
};

struct SymmetryError : Error {
    using Error::Error;
};

struct CenterError : Error {
    using Error::Error;
};

struct GaugeDegenerateError : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

struct EndSingularityError : Error {
    EndSingularityError(int end_index, const std::string& what)
        : Error(what), end(end_index) {}
    int end;
};

// Collinear-chart singular set hit; names the vanishing denominator.
struct CollisionSingularityError : Error {
    using Error::Error;
};

struct ArcRangeError : Error {
    using Error::Error;
};

struct PunctureAngleError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DomainEscapeError : Error {
    using Error::Error;
};

struct StepUnderflowError : Error {
    using Error::Error;
};

struct StiffnessError : Error {
    using Error::Error;
};

struct NotFallingError : Error {
    using Error::Error;
};

struct NoBracketError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct EscapeError : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

struct StencilDomainError : Error {
    using Error::Error;
};

} // namespace shapegeo
