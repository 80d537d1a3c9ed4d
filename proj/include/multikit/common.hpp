#ifndef MULTIKIT_COMMON_HPP
#define MULTIKIT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multikit {

/// Index of an element inside a carrier; display names live in the structure.
using ElementId = std::uint32_t;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violation of an operation's precondition or of a structure invariant.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A configured search or size bound was exceeded.
class LimitError : public Error {
public:
    explicit LimitError(const std::string& msg) : Error(msg) {}
};

/// Syntax or consistency error in a text input; line/col are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

} // namespace multikit

#endif
