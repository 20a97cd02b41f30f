#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rap {

enum class ErrorKind {
    InvalidOrder,
    DivisionByZero,
    Embedding,
    NonUnitConstantTerm,
    TruncationExceeded,
    InvalidPolynomial,
    InvalidInput,
    PeriodNotFound,
    NotPeriodic,
    InternalInconsistency,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Literal parse failure; `column` is the 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error(ErrorKind::Parse, what + " at column " + std::to_string(column + 1)),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace rap
