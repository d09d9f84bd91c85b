#pragma once

#include <stdexcept>
#include <string>

namespace hwpl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, lattice elements, sheaf syntax).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation refused its input because a stated hypothesis does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but outside the supported regime
/// (wrong number of weights, same-tube decomposables, ...).
class UnsupportedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Brute-force enumeration would exceed its size limit.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// A computation that must be exact was not (a division left a remainder,
/// two independent routes disagreed).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace hwpl
