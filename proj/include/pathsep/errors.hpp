#pragma once

#include <stdexcept>
#include <string>

namespace pathsep {

/// Raised when a documented precondition or invariant does not hold.
/// `invariant()` names the violated contract so callers (and the CLI)
/// can report it verbatim.
class ContractViolation : public std::runtime_error {
public:
    ContractViolation(std::string invariant, const std::string& detail)
        : std::runtime_error(invariant + ": " + detail),
          invariant_(std::move(invariant)) {}

    explicit ContractViolation(std::string invariant)
        : std::runtime_error(invariant), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// Raised by the graph file parser; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace pathsep
