#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgr {

enum class ErrorKind {
    EdgeIdClash,
    VertexIdClash,
    DomainGap,
    NotBijective,
    NotASubgraph,
    InvalidPatch,
    InvalidPatchType,
    InvalidRule,
    ContextPreservationViolation,
    SharedName,
    DanglingRhsName,
    UnknownTraceKey,
    DuplicateTraceKey,
    PositionMismatch,
    NotAMorphism,
    IdExhaustion,
    BoundTooSmall,
    StepLimitReached,
    DeterminismViolation,
    NotDeterministic,
    BadArity,
    SelfLoopInTopology,
    AlphabetClash,
    InvalidRedex,
    Syntax,
    DuplicateId,
    UndeclaredEndpoint,
    UnknownName,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Syntax-level failure while reading the text formats; always carries a
/// 1-based source location.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string & message)
        : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace pgr
