#pragma once

#include <stdexcept>
#include <string>

namespace qslkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad arguments: dimension mismatch, index/parameter out of range
struct UsageError : Error {
    using Error::Error;
};

// malformed input file or JSON
struct ParseError : Error {
    using Error::Error;
};

// a matrix failed the density-matrix invariants
struct InvalidStateError : Error {
    using Error::Error;
};

// singular decay rate, non-convergent quadrature, step too coarse, ...
struct NumericError : Error {
    using Error::Error;
};

}  // namespace qslkit
