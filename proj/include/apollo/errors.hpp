#pragma once

#include <stdexcept>
#include <string>

namespace apollo {

// Input outside an operation's mathematical domain (negative sqrt argument,
// nonpositive curvature where positivity is required, non-ellipse, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Division by zero and friends.
class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// API misuse: mismatched radicands, malformed arrangement, bad pair.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an internal invariant breaks (e.g. a negative radicand on a
// positive trajectory). Should never fire.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace apollo
