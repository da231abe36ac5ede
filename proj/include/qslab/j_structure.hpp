#pragma once

// Complex structures on H^n.
//
// An anti-selfadjoint unitary J together with a unit i splits H^n into
// H+ = {x : Jx = x i} and H- = {x : Jx = -x i}. An orthonormal basis of H+
// over C_i is also an orthonormal basis of H^n over H, and operators that
// commute with J correspond one-to-one to complex n x n matrices through
// their matrix in that basis (res) and its unique right-linear extension (lift).

#include <utility>
#include <vector>

#include "qslab/qmatrix.hpp"

namespace qslab {

class ComplexStructure {
 public:
  /// Validates J (J^* = -J, J^*J = I within `tol`) and computes the H+ basis.
  /// Throws DomainError when either invariant is violated.
  ComplexStructure(QMatrix j, UnitImaginary unit, double tol = 1e-8);

  const QMatrix& j() const { return j_; }
  const UnitImaginary& unit() const { return unit_; }
  const std::vector<QVector>& plus_basis() const { return basis_; }
  std::size_t dim() const { return j_.dim(); }

 private:
  QMatrix j_;
  UnitImaginary unit_;
  std::vector<QVector> basis_;
};

/// J = componentwise left multiplication by e1, paired with `unit`.
ComplexStructure standard_j(std::size_t n, const UnitImaginary& unit = UnitImaginary::e1());

/// Orthonormal basis of H+ computed from J and i. Each vector has its
/// largest (by C_i-part) component rotated to the positive real axis.
std::vector<QVector> plus_basis(const QMatrix& j, const UnitImaginary& unit);

/// ||TJ - JT||
double commutator_norm(const QMatrix& t, const QMatrix& j);

/// ||TJ - JT|| <= tol * max(1, ||T||)
bool commutes_with_j(const QMatrix& t, const QMatrix& j, double tol = kPredicateTolerance);

/// Matrix of T restricted to H+ in the plus basis, entries <e_m, T e_k> read
/// in C_i. Throws NonCommuting unless commutes_with_j(t, s.j(), tol).
CMatrix res_ji(const QMatrix& t, const ComplexStructure& s, double tol = kPredicateTolerance);

/// The right-linear operator with T e_k = sum_m e_m M(m, k).
QMatrix lift_ji(const CMatrix& m, const ComplexStructure& s);

/// x = x1 + x2 j with x1, x2 in H+, where j = orthogonal_unit(i).
std::pair<QVector, QVector> plus_decompose(std::span<const Quaternion> x, const ComplexStructure& s);

}  // namespace qslab
