#pragma once

#include <stdexcept>
#include <string>

namespace erconn {

// Invalid parameters or inputs that violate a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Graphs of different node counts were combined.
class DimensionError : public DomainError {
 public:
  explicit DimensionError(const std::string& what) : DomainError(what) {}
};

// The request is valid but exceeds what this implementation handles
// (dense eigensolves beyond the node ceiling, enumeration beyond n = 6).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace erconn
