#pragma once

// Jacobi kernels shared by the complex and quaternionic code paths.
//
// Each 2x2 step first rotates the off-diagonal scalar g onto the positive
// reals with diag(1, conj(u)), u = g/|g|, then applies a real Givens rotation.
// Scalars act from the right, which is what makes the same code valid for
// quaternion entries.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "qslab/errors.hpp"
#include "qslab/matrix.hpp"

namespace qslab::detail {

inline double real_part(const Complex& c) { return c.real(); }
inline double real_part(const Quaternion& q) { return q.w; }

struct Givens {
  double c = 1.0;
  double s = 0.0;
};

// Zeroes the off-diagonal of [[alpha, g], [g, beta]] (g > 0).
inline Givens symmetric_rotation(double alpha, double beta, double g) {
  const double zeta = (beta - alpha) / (2.0 * g);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
  const double c = 1.0 / std::hypot(1.0, t);
  return {c, c * t};
}

// Columns p, q of M are replaced by the columns of M * diag(1, conj(u)) * [[c, s], [-s, c]].
template <class S>
void rotate_columns(Matrix<S>& m, std::size_t p, std::size_t q, const S& ubar, Givens r) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const S a = m(k, p);
    const S b = m(k, q) * ubar;
    m(k, p) = a * r.c - b * r.s;
    m(k, q) = a * r.s + b * r.c;
  }
}

// Rows p, q of M are replaced by the rows of W^* M for the same W as above.
template <class S>
void rotate_rows(Matrix<S>& m, std::size_t p, std::size_t q, const S& u, Givens r) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const S a = m(p, k);
    const S b = u * m(q, k);
    m(p, k) = a * r.c - b * r.s;
    m(q, k) = a * r.s + b * r.c;
  }
}

template <class S>
double off_diagonal_norm(const Matrix<S>& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += abs2(h(i, j));
  return std::sqrt(s);
}

template <class S>
struct EigenResult {
  std::vector<double> values;  // descending
  Matrix<S> vectors;           // columns
};

/// Cyclic two-sided Jacobi for Hermitian matrices (complex or quaternionic).
template <class S>
EigenResult<S> hermitian_jacobi(Matrix<S> h, double rel_tol = 1e-14, int max_sweeps = 100) {
  using std::conj;
  const std::size_t n = h.rows();
  Matrix<S> v = Matrix<S>::identity(n);
  const double scale = h.frobenius();
  const double target = rel_tol * scale;
  int sweep = 0;
  while (off_diagonal_norm(h) > target) {
    if (++sweep > max_sweeps) throw NumericalFailure("Hermitian Jacobi: sweep cap reached without convergence");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const S gamma = h(p, q);
        const double g = std::sqrt(abs2(gamma));
        if (g == 0.0) continue;
        const S u = gamma / g;
        const S ubar = conj(u);
        const Givens r = symmetric_rotation(real_part(h(p, p)), real_part(h(q, q)), g);
        rotate_columns(h, p, q, ubar, r);
        rotate_rows(h, p, q, u, r);
        rotate_columns(v, p, q, ubar, r);
        h(p, q) = S{};
        h(q, p) = S{};
        h(p, p) = S(real_part(h(p, p)));
        h(q, q) = S(real_part(h(q, q)));
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return real_part(h(a, a)) > real_part(h(b, b)); });
  EigenResult<S> out{std::vector<double>(n), Matrix<S>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = real_part(h(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// Extends the first `have` orthonormal columns of q (rows >= cols) to a full
/// orthonormal set by Gram-Schmidt on standard basis vectors.
template <class S>
void complete_orthonormal_columns(Matrix<S>& q, std::size_t have) {
  const std::size_t m = q.rows();
  std::size_t filled = have;
  for (std::size_t e = 0; e < m && filled < q.cols(); ++e) {
    std::vector<S> cand(m);
    cand[e] = S(1.0);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t c = 0; c < filled; ++c) {
        const auto col = q.column(c);
        const S proj = inner<S>(col, cand);
        for (std::size_t r = 0; r < m; ++r) cand[r] -= col[r] * proj;
      }
    const double nrm = vector_norm<S>(cand);
    if (nrm < 1e-6) continue;
    for (auto& x : cand) x /= nrm;
    q.set_column(filled++, cand);
  }
  if (filled < q.cols()) throw NumericalFailure("orthonormal completion failed");
}

template <class S>
struct SvdResult {
  Matrix<S> u;                 // rows x k
  std::vector<double> sigma;   // k values, descending
  Matrix<S> v;                 // cols x k
};

/// One-sided (Hestenes) Jacobi SVD of a matrix with rows >= cols.
/// Returns A = U diag(sigma) V^* with k = cols.
template <class S>
SvdResult<S> one_sided_jacobi(Matrix<S> a, int max_sweeps = 100) {
  using std::conj;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw DomainError("one-sided Jacobi expects rows >= cols");
  Matrix<S> v = Matrix<S>::identity(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  // Columns below eps * ||A||_F count as zero; rotating them only stirs rounding noise.
  const double tiny = eps * eps * abs2(a.frobenius());
  const double orth_tol = eps * static_cast<double>(std::max<std::size_t>(m, 1));

  for (int sweep = 0;; ++sweep) {
    if (sweep >= max_sweeps) throw NumericalFailure("one-sided Jacobi SVD: sweep cap reached without convergence");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        S gamma{};
        for (std::size_t k = 0; k < m; ++k) {
          alpha += abs2(a(k, p));
          beta += abs2(a(k, q));
          gamma += conj(a(k, p)) * a(k, q);
        }
        const double g = std::sqrt(abs2(gamma));
        if (alpha <= tiny || beta <= tiny || g <= orth_tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const S u = gamma / g;
        const Givens r = symmetric_rotation(alpha, beta, g);
        rotate_columns(a, p, q, conj(u), r);
        rotate_columns(v, p, q, conj(u), r);
      }
    if (!rotated) break;
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = vector_norm<S>(a.column(j));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  SvdResult<S> out{Matrix<S>(m, n), std::vector<double>(n), Matrix<S>(n, n)};
  const double smax = n ? norms[order[0]] : 0.0;
  const double zero_cut = smax * eps * static_cast<double>(std::max<std::size_t>(m, 1));
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = norms[j];
    for (std::size_t r = 0; r < n; ++r) out.v(r, k) = v(r, j);
    if (norms[j] > zero_cut && norms[j] > 0.0) {
      for (std::size_t r = 0; r < m; ++r) out.u(r, k) = a(r, j) / norms[j];
      ++nonzero;
    }
  }
  // Columns with (numerically) zero sigma get an arbitrary orthonormal completion;
  // they sit at the end because sigma is sorted.
  complete_orthonormal_columns(out.u, nonzero);
  return out;
}

}  // namespace qslab::detail
