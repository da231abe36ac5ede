#pragma once

// Dense complex linear algebra used as the substrate for chi-images and
// res_{Ji} matrices. Sizes stay small (n <= 64), so everything is Jacobi or
// plain QR based and favors accuracy over speed.

#include <vector>

#include "qslab/matrix.hpp"

namespace qslab::linalg {

struct HermEig {
  std::vector<double> values;  // descending
  CMatrix vectors;             // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition by cyclic Jacobi.
/// Throws DomainError if ||M - M^*||_F > herm_tol * max(1, ||M||_F),
/// NumericalFailure if 100 sweeps do not converge.
HermEig herm_eig(const CMatrix& m, double herm_tol = 1e-10);

struct Svd {
  CMatrix u;                  // rows x k, orthonormal columns
  std::vector<double> sigma;  // k = min(rows, cols), descending
  CMatrix v;                  // cols x k, orthonormal columns
};

/// M = U diag(sigma) V^*, one-sided Jacobi.
Svd svd(const CMatrix& m);

std::vector<double> singular_values(const CMatrix& m);

/// Largest singular value.
double opnorm(const CMatrix& m);

/// Smallest singular value of a square matrix.
double sigma_min(const CMatrix& m);

/// Solves M x = b. Throws SingularMatrix when sigma_min <= rel_threshold * sigma_max.
CVector solve(const CMatrix& m, const CVector& b, double rel_threshold = 1e-13);

/// Inverse of a square matrix with the same singularity test as solve().
CMatrix inverse(const CMatrix& m, double rel_threshold = 1e-13);

/// Moore-Penrose pseudoinverse; singular values <= rel_threshold * sigma_max are dropped.
CMatrix pinv(const CMatrix& m, double rel_threshold = 1e-12);

/// Eigenvalues of a general square complex matrix (Hessenberg reduction plus
/// shifted complex QR). Order is unspecified.
CVector eigenvalues(const CMatrix& m);

/// Unit vector x minimizing ||M x|| (right singular vector of sigma_min).
CVector null_vector(const CMatrix& m);

/// Least-squares solution of M x = b via the pseudoinverse; also reports the
/// 2-norm condition number sigma_max / sigma_min of M.
struct LeastSquares {
  CVector x;
  double condition = 0.0;
  std::size_t rank = 0;
};
LeastSquares least_squares(const CMatrix& m, const CVector& b, double rel_threshold = 1e-13);

/// ||M - M^*||_F
double hermitian_defect(const CMatrix& m);

}  // namespace qslab::linalg
