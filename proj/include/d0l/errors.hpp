#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace d0l {

/// A caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A word or morphism refers to letters outside the alphabet it is used with.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always indicates a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A brute-force computation outgrew its configured memory guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace d0l
