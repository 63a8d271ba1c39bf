#pragma once

#include <stdexcept>
#include <string>

namespace jwalk {

// Precondition violated: invalid parameters, shapes, or non-symmetric input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed-form expression hit a (near-)zero denominator.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Work would exceed a configured size limit (e.g. the brute-force vertex cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Root bracketing could not find a sign change.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jwalk
