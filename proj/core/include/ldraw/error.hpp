#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldraw {

/// Malformed graph or layout text. Carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An input violates a documented precondition (invalid layout, self-loop,
/// disconnected graph, infeasible density, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact solver was asked to run beyond its configured size guard.
class SizeGuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace ldraw
