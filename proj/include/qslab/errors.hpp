#pragma once

#include <stdexcept>
#include <string>

namespace qslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad dimension, p <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel hit its sweep/iteration cap.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// A matrix that had to be inverted is singular at the working threshold.
class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& what, double sigma_min)
      : Error(what + " (sigma_min = " + std::to_string(sigma_min) + ")"),
        sigma_min_(sigma_min) {}

  double sigma_min() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

/// An operator was required to commute with a complex structure J but does not.
class NonCommuting : public Error {
 public:
  NonCommuting(const std::string& what, double commutator_norm)
      : Error(what + " (||[T,J]|| = " + std::to_string(commutator_norm) + ")"),
        commutator_norm_(commutator_norm) {}

  double commutator_norm() const noexcept { return commutator_norm_; }

 private:
  double commutator_norm_;
};

}  // namespace qslab
