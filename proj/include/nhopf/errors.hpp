#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nhopf {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation (division by an
// interval containing zero, square root of an interval reaching below zero).
struct DomainError : Error {
    using Error::Error;
};

// An enclosure degenerated to a non-finite value.
struct OverflowError : Error {
    using Error::Error;
};

// Operands whose index maps or grids are incompatible, or an operation that
// would produce content the requested output shape cannot represent.
struct ShapeError : Error {
    using Error::Error;
};

// The normalization functional B vanishes on the enclosure, so the
// gamma/alpha solve is undefined.
struct DegeneracyError : Error {
    using Error::Error;
};

// A mode is covered neither by the finite frontier nor by the analytic
// tail bound of an operator-norm computation.
struct CoverageError : Error {
    using Error::Error;
};

struct ParamError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what, std::vector<double> residuals = {})
        : Error(what), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

} // namespace nhopf
