#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace neighborly {

enum class ErrorKind {
    InvalidModification,
    NotAnEdge,
    ParseError,
    EmptyClause,
    IncompleteAssignment,
    NotE3Cnf,
    ClauseTooWide,
    Tautology,
    TooFewVariables,
    TooFewClauses,
    NotSatisfying,
    NotATriangle,
    EmptyInput,
    KTooSmall,
    EmptyGraph,
    IsolatedVertex,
    NotUniversalEdged,
    OracleBudgetExceeded,
    NoProgress,
    Timeout,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Position is 1-based; for byte-oriented formats (graph6) line is 1 and
// column is the byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorKind::ParseError, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace neighborly
