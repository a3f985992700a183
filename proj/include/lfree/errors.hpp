#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfree {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Equation text does not match the grammar. `pos` is the 0-based byte offset
// of the offending character in the input string.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos_)
        : Error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
    std::size_t pos;
};

// A precondition of an operation does not hold: wrong equation shape, index
// out of range, unsupported instance size, and so on.
struct DomainError : Error {
    using Error::Error;
};

// An exhaustive computation was asked to exceed its configured cap.
struct CapError : DomainError {
    using DomainError::DomainError;
};

// 64-bit arithmetic would overflow. Values never wrap silently.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace lfree
