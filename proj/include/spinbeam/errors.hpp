#pragma once

#include <stdexcept>
#include <string>

namespace spinbeam {

/// A numerical input outside the domain of a physical formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or out-of-range run configuration. `line()` is 1-based, 0 when
/// the problem is not tied to a single input line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace spinbeam
