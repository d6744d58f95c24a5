#pragma once

#include <stdexcept>
#include <string>

namespace a22 {

// Mixed scalar domains, non-positive-definite Im(tau), singular C*tau + D.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Caller violated an operation's precondition (odd characteristic, repeated index, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Unsupported prime, singular free-variable choice, empty witness list.
class ConfigurationError : public std::invalid_argument {
 public:
  explicit ConfigurationError(const std::string& what) : std::invalid_argument(what) {}
};

// A denominator in a rational formula vanished (numerically or exactly).
class DegeneratePointError : public std::runtime_error {
 public:
  explicit DegeneratePointError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace a22
