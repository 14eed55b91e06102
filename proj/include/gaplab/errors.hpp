#pragma once

#include <stdexcept>
#include <string>

namespace gaplab {

// Invalid input: preconditions violated, malformed config, unusable parameters.
// The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation would exceed a configured resource cap.
class ResourceError : public DomainError {
 public:
  explicit ResourceError(const std::string& what) : DomainError(what) {}
};

// Numerical failure in the eigensolver path (ill-conditioned basis).
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// A named mathematical side condition, evaluated and reported rather than
// thrown: values stay available, the CLI exits 3 when any check fails.
struct ConstraintCheck {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

}  // namespace gaplab
