#pragma once

#include <stdexcept>
#include <string>

namespace tropgw {

// Mathematically invalid request (division by zero, unstable n, wrong fan,
// ...). Maps to status/exit code 1 at the C boundary.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input (bad JSON, unknown chart id, inconsistent vector lengths).
// Maps to status/exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropgw
