#ifndef CROSSINGS_ERRORS_HPP
#define CROSSINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crossings {

// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// A configured work cap (pair operations, enumeration size, exact-enumeration
// vertex limit) would be exceeded.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's mathematical domain (degenerate variance,
// family size out of range, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crossings

#endif
