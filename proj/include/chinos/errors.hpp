#pragma once

#include <stdexcept>
#include <string>

namespace chinos {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normalizing a (numerically) zero vector, e.g. a forbidden double excitation
// of a hard-core mode.
struct NullMoveError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Angle outside the open interval where the operator family is non-degenerate.
struct DegenerateAngleError : Error {
    using Error::Error;
};

// Bob's guess is closer than d0 to Alice's.
struct RestrictionViolationError : Error {
    using Error::Error;
};

// Guess outside the subset allowed by the player's own choice.
struct IntelligenceViolationError : Error {
    using Error::Error;
};

struct RootNotBracketedError : Error {
    using Error::Error;
};

// Computed set/pair partition of a metric matrix differs from the expected one.
struct DecompositionMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int row = -1;
    int col = -1;
    ParseError(const std::string& msg, int r, int c)
        : Error(msg + " (row " + std::to_string(r) + ", col " + std::to_string(c) + ")"),
          row(r), col(c) {}
};

struct ShapeError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

}  // namespace chinos
