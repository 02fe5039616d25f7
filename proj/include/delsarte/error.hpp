#pragma once

#include <stdexcept>
#include <string>

namespace delsarte {

enum class ErrorKind {
  invalid_input,
  domain_error,
  solver_failure,
  quadrature_error,
  not_a_strict_tiling,
  condition_violated,
  singular_point,
  construction_error,
  internal_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::domain_error: return "domain-error";
    case ErrorKind::solver_failure: return "solver-failure";
    case ErrorKind::quadrature_error: return "quadrature-error";
    case ErrorKind::not_a_strict_tiling: return "not-a-strict-tiling";
    case ErrorKind::condition_violated: return "condition-violated";
    case ErrorKind::singular_point: return "singular-point";
    case ErrorKind::construction_error: return "construction-error";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace delsarte
