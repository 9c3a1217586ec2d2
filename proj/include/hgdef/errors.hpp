#pragma once

#include <stdexcept>
#include <string>

namespace hgdef {

/// An operation precondition does not hold (bad parameters, infeasible request).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Objects that do not belong together were mixed (e.g. sets over different universes).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Instance exceeds the fixed bit-mask capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed hypergraph file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace hgdef
