#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphaland {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the region where the quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series failed to reach its stopping criterion within the term budget.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double partial_sum, std::size_t terms)
      : Error(what), partial_sum_(partial_sum), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  std::size_t terms_;
};

/// Coefficient extraction divides by G_k(r, alpha), which vanishes for alpha = 0 or alpha = 2k.
class DegenerateExtractionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Too few quadrature nodes to separate the requested Fourier mode.
class AliasingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The root of the Landau function was pushed against the bracket ceiling.
class BoundaryError : public Error {
 public:
  BoundaryError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// The admissible-map generator exhausted its attempts.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace alphaland
