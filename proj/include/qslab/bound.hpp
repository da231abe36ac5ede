#pragma once

#include <string>
#include <utility>

namespace qslab {

/// One instantiated inequality lhs <= rhs (equalities are stored as
/// |a - b| <= 0), accepted with additive slack `tol`.
struct Bound {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;

  double margin() const { return rhs + tol - lhs; }
  bool holds() const { return lhs <= rhs + tol; }
};

inline Bound equality(std::string label, double a, double b, double tol) {
  return {std::move(label), a > b ? a - b : b - a, 0.0, tol};
}

}  // namespace qslab
