#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projlab {

// Bad parameters: integrality, range and precondition failures. CLI exit code 1.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input files. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A checked theorem (exact lemma) did not hold. CLI exit code 3.
class AssertionFailure : public std::runtime_error {
public:
    AssertionFailure(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace projlab
