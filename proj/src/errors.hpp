#ifndef PRIMEX_ERRORS_HPP
#define PRIMEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primex {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset` is a byte offset for graph6 input and a
// 1-based line number for edge-list input; -1 when not applicable.
struct ParseError : Error {
    ParseError(const std::string& what, long offset_or_line = -1)
        : Error(what), offset(offset_or_line) {}
    long offset;
};

// A documented precondition of an operation does not hold for the input.
struct DomainError : Error {
    using Error::Error;
};

// An exhaustive operation was refused because a size guard was exceeded.
struct LimitError : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct VerifyError : Error {
    using Error::Error;
};

}  // namespace primex

#endif
