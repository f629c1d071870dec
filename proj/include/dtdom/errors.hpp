#pragma once

#include <stdexcept>
#include <string>

namespace dtdom {

/// Malformed or out-of-range input: bad endpoints, unknown family names,
/// sets that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the mathematical domain of an operation,
/// e.g. an isolated vertex handed to a total-domination solver.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// File could not be read or parsed. `line()` is 1-based, 0 when unknown.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An internal consistency check failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dtdom
