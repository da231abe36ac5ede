#include "qslab/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslab/detail/jacobi.hpp"
#include "qslab/errors.hpp"

namespace qslab::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const CMatrix& m, const char* what) {
  if (!m.square()) throw DomainError(std::string(what) + ": matrix must be square");
}

}  // namespace

double hermitian_defect(const CMatrix& m) {
  require_square(m, "hermitian_defect");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(s);
}

HermEig herm_eig(const CMatrix& m, double herm_tol) {
  require_square(m, "herm_eig");
  const double defect = hermitian_defect(m);
  if (defect > herm_tol * std::max(1.0, m.frobenius()))
    throw DomainError("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  // symmetrize so rounding-level asymmetry cannot leak into the rotations
  CMatrix h = m;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    h(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < h.cols(); ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }
  auto r = detail::hermitian_jacobi(std::move(h));
  return {std::move(r.values), std::move(r.vectors)};
}

Svd svd(const CMatrix& m) {
  if (m.rows() >= m.cols()) {
    auto r = detail::one_sided_jacobi(m);
    return {std::move(r.u), std::move(r.sigma), std::move(r.v)};
  }
  auto r = detail::one_sided_jacobi(m.adjoint());
  return {std::move(r.v), std::move(r.sigma), std::move(r.u)};
}

std::vector<double> singular_values(const CMatrix& m) { return svd(m).sigma; }

double opnorm(const CMatrix& m) {
  if (m.empty()) return 0.0;
  return singular_values(m).front();
}

double sigma_min(const CMatrix& m) {
  require_square(m, "sigma_min");
  if (m.empty()) return 0.0;
  return singular_values(m).back();
}

CMatrix inverse(const CMatrix& m, double rel_threshold) {
  require_square(m, "inverse");
  const Svd d = svd(m);
  const double smax = d.sigma.empty() ? 0.0 : d.sigma.front();
  const double smin = d.sigma.empty() ? 0.0 : d.sigma.back();
  if (!(smin > rel_threshold * smax) || smin == 0.0) throw SingularMatrix("inverse of singular matrix", smin);
  const std::size_t n = m.rows();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += d.v(i, k) * std::conj(d.u(j, k)) / d.sigma[k];
      out(i, j) = s;
    }
  return out;
}

CVector solve(const CMatrix& m, const CVector& b, double rel_threshold) {
  require_square(m, "solve");
  if (b.size() != m.rows()) throw DomainError("solve: right-hand side has wrong length");
  return inverse(m, rel_threshold).apply(b);
}

CMatrix pinv(const CMatrix& m, double rel_threshold) {
  const Svd d = svd(m);
  const double smax = d.sigma.empty() ? 0.0 : d.sigma.front();
  CMatrix out(m.cols(), m.rows());
  for (std::size_t k = 0; k < d.sigma.size(); ++k) {
    if (!(d.sigma[k] > rel_threshold * smax) || d.sigma[k] == 0.0) continue;
    for (std::size_t i = 0; i < m.cols(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j) out(i, j) += d.v(i, k) * std::conj(d.u(j, k)) / d.sigma[k];
  }
  return out;
}

LeastSquares least_squares(const CMatrix& m, const CVector& b, double rel_threshold) {
  if (b.size() != m.rows()) throw DomainError("least_squares: right-hand side has wrong length");
  const Svd d = svd(m);
  const double smax = d.sigma.empty() ? 0.0 : d.sigma.front();
  LeastSquares out{CVector(m.cols()), 0.0, 0};
  for (std::size_t k = 0; k < d.sigma.size(); ++k) {
    if (!(d.sigma[k] > rel_threshold * smax) || d.sigma[k] == 0.0) continue;
    ++out.rank;
    Complex coef{};
    for (std::size_t j = 0; j < m.rows(); ++j) coef += std::conj(d.u(j, k)) * b[j];
    coef /= d.sigma[k];
    for (std::size_t i = 0; i < m.cols(); ++i) out.x[i] += d.v(i, k) * coef;
  }
  const double smin = d.sigma.empty() ? 0.0 : d.sigma.back();
  out.condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  return out;
}

CVector null_vector(const CMatrix& m) {
  const Svd d = svd(m);
  if (m.cols() > m.rows()) {
    // wide matrix: any vector orthogonal to the row space works
    CMatrix v(m.cols(), m.cols());
    for (std::size_t r = 0; r < m.cols(); ++r)
      for (std::size_t c = 0; c < d.v.cols(); ++c) v(r, c) = d.v(r, c);
    detail::complete_orthonormal_columns(v, d.v.cols());
    return v.column(m.cols() - 1);
  }
  return d.v.column(d.v.cols() - 1);
}

namespace {

// c real, s complex with [[c, s], [-conj(s), c]] (a, b)^T = (r, 0)^T.
struct CGivens {
  double c;
  Complex s;
};

CGivens make_givens(Complex a, Complex b) {
  const double aa = std::abs(a);
  const double bb = std::abs(b);
  if (bb == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, 1.0};
  const double nrm = std::hypot(aa, bb);
  const Complex phase = a / aa;
  return {aa / nrm, phase * std::conj(b) / nrm};
}

void hessenberg_reduce(CMatrix& h) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xn = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xn += std::norm(h(i, k));
    xn = std::sqrt(xn);
    if (xn == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    CVector v(n);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] += phase * xn;
    double vn = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
    vn = std::sqrt(vn);
    if (vn == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vn;
    // H <- (I - 2 v v^*) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * s;
    }
    // H <- H (I - 2 v v^*)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

}  // namespace

CVector eigenvalues(const CMatrix& m) {
  require_square(m, "eigenvalues");
  const std::size_t n = m.rows();
  CVector eig(n);
  if (n == 0) return eig;
  CMatrix h = m;
  hessenberg_reduce(h);

  std::size_t hi = n - 1;
  int iter = 0;
  int total = 0;
  const int cap = 200 * static_cast<int>(n);
  while (true) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (std::abs(h(lo, lo - 1)) <= kEps * (scale > 0.0 ? scale : 1.0)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > cap) throw NumericalFailure("eigenvalues: QR iteration did not converge");
    ++iter;

    Complex mu;
    if (iter % 11 == 10) {
      // exceptional shift breaks rare cycles
      mu = h(hi, hi) + Complex(std::abs(h(hi, hi - 1)), std::abs(h(hi - 1, hi > 1 ? hi - 2 : 0)));
    } else {
      const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const Complex half = 0.5 * (a - d);
      const Complex disc = std::sqrt(half * half + b * c);
      const Complex m1 = 0.5 * (a + d) + disc;
      const Complex m2 = 0.5 * (a + d) - disc;
      mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
    }

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    std::vector<CGivens> rots;
    rots.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const CGivens g = make_givens(h(k, k), h(k + 1, k));
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = 0.0;
      rots.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const CGivens& g = rots[k - lo];
      const std::size_t last = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= last; ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

}  // namespace qslab::linalg
