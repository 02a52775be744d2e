#ifndef LOCC_ERROR_HPP
#define LOCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace locc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6, edge list). Carries a byte offset or
/// line number inside the message.
struct ParseError : Error {
    using Error::Error;
};

/// An operation was called outside its documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// A configured size/enumeration guard was exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

} // namespace locc

#endif
