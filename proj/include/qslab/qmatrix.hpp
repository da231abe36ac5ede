#pragma once

// Quaternionic matrices as bounded right-linear operators on H^n.
//
// A QMatrix stores complex blocks (A, B) over C_{e1} and means T = A + B j
// entrywise, j = e2. Vectors x = x1 + x2 j embed into C^{2n} through
// iota(x) = (x1, conj(x2)); with that embedding
//
//     chi(T) = [[A, -B], [conj(B), conj(A)]]
//
// is a unital *-homomorphism into the complex 2n x 2n matrices, and every
// norm or spectral question about T is answered through chi(T).

#include <cstddef>
#include <span>
#include <vector>

#include "qslab/matrix.hpp"
#include "qslab/quaternion.hpp"

namespace qslab {

using QVector = std::vector<Quaternion>;

/// <x, y> = sum conj(x_k) y_k
Quaternion qinner(std::span<const Quaternion> x, std::span<const Quaternion> y);
double qnorm(std::span<const Quaternion> x);
/// x * a componentwise (right scalar multiplication).
QVector scale_right(std::span<const Quaternion> x, const Quaternion& a);
QVector add(std::span<const Quaternion> x, std::span<const Quaternion> y);
QVector sub(std::span<const Quaternion> x, std::span<const Quaternion> y);

/// iota(x) = (x1, conj(x2)) in C^{2n}.
CVector embed(std::span<const Quaternion> x);
/// Inverse of embed().
QVector unembed(std::span<const Complex> v);

/// Modified Gram-Schmidt over H (projections x - e<e,x>). Vectors whose
/// residual falls below `drop_tol` relative to their input norm are skipped.
std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs, double drop_tol = 1e-8);

class QMatrix {
 public:
  QMatrix() = default;
  /// The zero operator on H^n.
  explicit QMatrix(std::size_t n);
  /// T = A + B j. Throws DomainError unless both blocks are n x n.
  QMatrix(CMatrix a, CMatrix b);

  static QMatrix identity(std::size_t n);
  static QMatrix from_entries(const HMatrix& entries);
  static QMatrix diagonal(std::span<const Quaternion> d);
  /// x -> q x componentwise; right-linear, equal to diag(q, ..., q).
  static QMatrix left_scalar(std::size_t n, const Quaternion& q);
  /// x -> u <v, x>
  static QMatrix outer(std::span<const Quaternion> u, std::span<const Quaternion> v);
  /// Columns of the matrix are the given vectors.
  static QMatrix from_columns(const std::vector<QVector>& cols);

  std::size_t dim() const { return a_.rows(); }
  const CMatrix& a() const { return a_; }
  const CMatrix& b() const { return b_; }

  Quaternion entry(std::size_t r, std::size_t c) const;
  HMatrix entries() const;
  QVector column(std::size_t c) const;

  QVector apply(std::span<const Quaternion> x) const;
  QMatrix adjoint() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);
  friend QMatrix operator+(QMatrix x, const QMatrix& y) { return x += y; }
  friend QMatrix operator-(QMatrix x, const QMatrix& y) { return x -= y; }
  friend QMatrix operator*(QMatrix x, double s) { return x *= s; }
  friend QMatrix operator*(double s, QMatrix x) { return x *= s; }
  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);

  double frobenius() const;

 private:
  CMatrix a_;
  CMatrix b_;
};

CMatrix chi(const QMatrix& t);
/// Reads (A, B) back from a matrix with chi-structure; the block symmetry is not checked.
QMatrix from_chi(const CMatrix& c);

/// Default relative tolerance for the operator predicates.
inline constexpr double kPredicateTolerance = 1e-10;

double opnorm(const QMatrix& t);
/// ||T - T^*|| <= tol * max(1, ||T||)
bool is_selfadjoint(const QMatrix& t, double tol = kPredicateTolerance);
bool is_antiselfadjoint(const QMatrix& t, double tol = kPredicateTolerance);
/// Selfadjoint and lambda_min(chi(T)) >= -tol * max(1, ||T||).
bool is_positive(const QMatrix& t, double tol = kPredicateTolerance);
bool is_normal(const QMatrix& t, double tol = kPredicateTolerance);
bool is_unitary(const QMatrix& t, double tol = kPredicateTolerance);

/// Spectral decomposition of a selfadjoint T = V diag(values) V^* by
/// quaternionic Jacobi. Values descending; vectors orthonormal over H.
struct QEigen {
  std::vector<double> values;
  std::vector<QVector> vectors;
};
QEigen selfadjoint_eigen(const QMatrix& t, double tol = kPredicateTolerance);

/// V diag(values) V^*
QMatrix spectral_synthesis(std::span<const double> values, const std::vector<QVector>& vectors);

/// Throws DomainError unless is_positive(t).
QMatrix sqrt_pos(const QMatrix& t);
/// sqrt(T^* T)
QMatrix abs(const QMatrix& t);
/// Eigenvalues raised to p > 0 on the eigenbasis of a positive T.
QMatrix frac_power(const QMatrix& t, double p);

struct Polar {
  QMatrix w;  // partial isometry, zero on ker(P)
  QMatrix p;  // |T|
};
/// T = W P. Singular values <= 1e-12 * sigma_max are treated as kernel.
Polar polar(const QMatrix& t);

/// T x = sum_n left[n] * sigmas[n] * <right[n], x>
struct QSvd {
  std::vector<double> sigmas;       // descending
  std::vector<QVector> left_basis;  // orthonormal basis of H^n
  std::vector<QVector> right_basis; // orthonormal basis of H^n
};
QSvd qsvd(const QMatrix& t);

/// sum_{n < k} left[n] sigmas[n] right[n]^*
QMatrix svd_truncation(const QSvd& d, std::size_t k);

/// Singular values from chi(T): every value of chi(T) appears twice; pairs are
/// checked to agree within pair_tol * max(1, sigma_max) and then halved.
std::vector<double> chi_singular_values(const QMatrix& t, double pair_tol = 1e-10);

}  // namespace qslab
