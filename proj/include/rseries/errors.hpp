#pragma once

#include <stdexcept>
#include <string>

namespace rseries {

// Argument outside the domain of the function (s <= 1 for Hurwitz zeta, |beta| >= 1 for Lerch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole (non-positive integer for gamma/digamma).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Series parameters outside the convergence region.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iteration budget exhausted before any rigorous tail bound could be established.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double achieved_bound)
      : std::runtime_error(what), achieved_bound_(achieved_bound) {}
  double achieved_bound() const noexcept { return achieved_bound_; }

 private:
  double achieved_bound_;
};

// Richardson table in the Abel oracle stopped settling.
class ExtrapolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rseries
