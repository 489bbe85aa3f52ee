#pragma once

#include <stdexcept>
#include <string>

namespace viscobessel {

/// Argument outside the mathematical domain of an operation (maps to CLI exit 2).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerically valid request the library declines to answer at the
/// requested accuracy, e.g. a Dirichlet series below its time floor or a
/// load history on a non-uniform grid (CLI exit 3).
class refusal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algorithm ran and failed: root finder divergence, exhausted zero
/// table, non-finite Laplace contour value (CLI exit 4).
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Malformed text input; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace viscobessel
