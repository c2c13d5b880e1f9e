#pragma once

#include <stdexcept>
#include <string>

namespace lovelab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the function's domain.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation at a pole, e.g. K(1).
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Wrong Lambert W branch for the argument.
struct BranchError : DomainError {
  using DomainError::DomainError;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double best)
      : Error(what), best_estimate(best) {}
  double best_estimate;
};

struct DivergenceError : Error {
  using Error::Error;
};

struct ConditioningError : Error {
  using Error::Error;
};

// Nyström grid too coarse for the kernel width.
struct ResolutionError : Error {
  ResolutionError(const std::string& what, int n)
      : Error(what), suggested_nodes(n) {}
  int suggested_nodes;
};

// Parameters outside a method's validity window.
struct ParameterError : Error {
  using Error::Error;
};

}  // namespace lovelab
