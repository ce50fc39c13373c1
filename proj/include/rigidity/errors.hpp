#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidity {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector length differs from the variable context size.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// Operands live in different polynomial rings.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition on argument values was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured pair or term ceiling was exceeded. Never a wrong answer.
class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Text input that does not conform to the polynomial or `.pres` grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rigidity
