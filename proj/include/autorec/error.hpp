#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autorec {

/// Stable error categories. The CLI prints the name and exits with status 1.
enum class ErrorCode {
    Syntax,
    Semantic,
    Precondition,
    DivisionByZero,
    StateCapExceeded,
    BudgetExceeded,
    Inconsistency,
    Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::Semantic: return "semantic";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::DivisionByZero: return "division-by-zero";
        case ErrorCode::StateCapExceeded: return "state-cap-exceeded";
        case ErrorCode::BudgetExceeded: return "budget-exceeded";
        case ErrorCode::Inconsistency: return "inconsistency";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse error carrying a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorCode::Syntax,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorCode::Precondition, message);
}

}  // namespace autorec
