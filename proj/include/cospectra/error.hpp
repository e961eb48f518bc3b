#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cospectra {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A precondition on an argument does not hold (out-of-range parameter,
/// wrong matrix kind, degenerate input).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// The computation needs more digits than it was given (or than the
/// escalation policy allows).
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its configured size bound.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace cospectra
