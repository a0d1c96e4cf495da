#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace greenseq {

enum class ErrorKind {
    NotSkewSymmetrizable,
    IndexOutOfRange,
    ArithmeticOverflow,
    ShapeMismatch,
    SizeLimit,
    NotSignCoherentInput,
    NonNegativityViolation,
    InvalidSplit,
    InvalidInputSequence,
    ShapeViolation,
    InternalSignViolation,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; kind() identifies the
// contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Input text could not be read. line/column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorKind::ParseError, message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace greenseq
