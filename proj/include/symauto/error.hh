#ifndef SYMAUTO_ERROR_HH
#define SYMAUTO_ERROR_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symauto {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A code point left [0, 0x10FFFF], e.g. through an output-function shift.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed input to a constructor or a violated precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configured size limit (state ceiling, enumeration span) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// SMT-LIB frontend error, carrying the 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace symauto

#endif
