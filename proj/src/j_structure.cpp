#include "qslab/j_structure.hpp"

#include <cmath>
#include <string>

#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"

namespace qslab {

namespace {

double dot4(const Quaternion& a, const Quaternion& b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }

HMatrix embed_entries(const CMatrix& m, const UnitImaginary& i) {
  HMatrix h(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) h(r, c) = i.embed(m(r, c));
  return h;
}

}  // namespace

ComplexStructure::ComplexStructure(QMatrix j, UnitImaginary unit, double tol) : j_(std::move(j)), unit_(unit) {
  const std::size_t n = j_.dim();
  if (n == 0) throw DomainError("complex structure on a zero-dimensional space");
  const double anti = opnorm(j_.adjoint() + j_);
  const double unitary = opnorm(j_.adjoint() * j_ - QMatrix::identity(n));
  if (anti > tol) throw DomainError("J is not anti-selfadjoint (||J^* + J|| = " + std::to_string(anti) + ")");
  if (unitary > tol) throw DomainError("J is not unitary (||J^*J - I|| = " + std::to_string(unitary) + ")");
  basis_ = qslab::plus_basis(j_, unit_);
}

ComplexStructure standard_j(std::size_t n, const UnitImaginary& unit) {
  if (n == 0) throw DomainError("standard_j: n must be at least 1");
  return ComplexStructure(QMatrix::left_scalar(n, Quaternion::e1()), unit);
}

std::vector<QVector> plus_basis(const QMatrix& j, const UnitImaginary& unit) {
  const std::size_t n = j.dim();
  // chi(J) v = i v  <=>  (-i chi(J)) v = v on the e1-slice; rotate to C_unit afterwards
  CMatrix h = chi(j);
  for (auto& v : h.data()) v *= Complex(0.0, -1.0);
  const linalg::HermEig e = linalg::herm_eig(h, 1e-8);
  if (!(e.values[n - 1] > 0.5 && e.values[n] < -0.5))
    throw DomainError("plus_basis: chi(J) does not split into two n-dimensional eigenspaces");

  const Quaternion q = *same_sphere(Quaternion::e1(), unit.quaternion());
  std::vector<QVector> raw;
  for (std::size_t k = 0; k < n; ++k) raw.push_back(scale_right(unembed(e.vectors.column(k)), q));
  std::vector<QVector> basis = gram_schmidt(raw, 1e-6);
  if (basis.size() != n) throw NumericalFailure("plus_basis: eigenvectors lost rank");

  for (auto& x : basis) {
    std::size_t best = 0;
    double bm = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double m = std::abs(unit.project(x[k]));
      if (m > bm + 1e-12) bm = m, best = k;
    }
    if (bm <= 0.0) continue;
    const Complex p = unit.project(x[best]);
    x = scale_right(x, unit.embed(std::conj(p) / std::abs(p)));
  }
  return basis;
}

double commutator_norm(const QMatrix& t, const QMatrix& j) { return opnorm(t * j - j * t); }

bool commutes_with_j(const QMatrix& t, const QMatrix& j, double tol) {
  return commutator_norm(t, j) <= tol * std::max(1.0, opnorm(t));
}

CMatrix res_ji(const QMatrix& t, const ComplexStructure& s, double tol) {
  const double c = commutator_norm(t, s.j());
  if (c > tol * std::max(1.0, opnorm(t))) throw NonCommuting("res_ji: operator does not commute with J", c);
  const QMatrix e = QMatrix::from_columns(s.plus_basis());
  const HMatrix r = (e.adjoint() * t * e).entries();
  CMatrix out(r.rows(), r.cols());
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b) out(a, b) = s.unit().project(r(a, b));
  return out;
}

QMatrix lift_ji(const CMatrix& m, const ComplexStructure& s) {
  if (m.rows() != s.dim() || m.cols() != s.dim()) throw DomainError("lift_ji: matrix size does not match the structure");
  const QMatrix e = QMatrix::from_columns(s.plus_basis());
  return e * QMatrix::from_entries(embed_entries(m, s.unit())) * e.adjoint();
}

std::pair<QVector, QVector> plus_decompose(std::span<const Quaternion> x, const ComplexStructure& s) {
  const Quaternion i = s.unit().quaternion();
  const Quaternion j = orthogonal_unit(s.unit()).quaternion();
  const Quaternion ij = i * j;
  const std::size_t n = s.dim();
  QVector x1(n), x2(n);
  for (const QVector& e : s.plus_basis()) {
    const Quaternion c = qinner(e, x);
    const Quaternion a = s.unit().embed({c.w, dot4(c, i)});
    const Quaternion b = s.unit().embed({dot4(c, j), dot4(c, ij)});
    x1 = add(x1, scale_right(e, a));
    x2 = add(x2, scale_right(e, b));
  }
  return {x1, x2};
}

}  // namespace qslab
