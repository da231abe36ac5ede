#include "qslab/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslab/complex_linalg.hpp"
#include "qslab/detail/jacobi.hpp"
#include "qslab/errors.hpp"

namespace qslab {

namespace {

// q = c1 + c2 j with c1, c2 in C_{e1}
Complex part1(const Quaternion& q) { return {q.w, q.x}; }
Complex part2(const Quaternion& q) { return {q.y, q.z}; }
Quaternion assemble(Complex c1, Complex c2) { return {c1.real(), c1.imag(), c2.real(), c2.imag()}; }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace

Quaternion qinner(std::span<const Quaternion> x, std::span<const Quaternion> y) { return inner<Quaternion>(x, y); }

double qnorm(std::span<const Quaternion> x) { return vector_norm<Quaternion>(x); }

QVector scale_right(std::span<const Quaternion> x, const Quaternion& a) {
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * a;
  return out;
}

QVector add(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  require_same_dim(x.size(), y.size(), "vector add");
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
  return out;
}

QVector sub(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  require_same_dim(x.size(), y.size(), "vector sub");
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
  return out;
}

CVector embed(std::span<const Quaternion> x) {
  const std::size_t n = x.size();
  CVector v(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = part1(x[k]);
    v[n + k] = std::conj(part2(x[k]));
  }
  return v;
}

QVector unembed(std::span<const Complex> v) {
  if (v.size() % 2 != 0) throw DomainError("unembed: odd length");
  const std::size_t n = v.size() / 2;
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = assemble(v[k], std::conj(v[n + k]));
  return x;
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs, double drop_tol) {
  std::vector<QVector> out;
  for (const auto& v : vs) {
    const double n0 = qnorm(v);
    if (n0 == 0.0) continue;
    QVector r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : out) r = sub(r, scale_right(e, qinner(e, r)));
    const double nr = qnorm(r);
    if (nr <= drop_tol * n0) continue;
    for (auto& c : r) c /= nr;
    out.push_back(std::move(r));
  }
  return out;
}

QMatrix::QMatrix(std::size_t n) : a_(n, n), b_(n, n) {}

QMatrix::QMatrix(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.square() || a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw DomainError("QMatrix: blocks must be square and of equal size");
}

QMatrix QMatrix::identity(std::size_t n) { return QMatrix(CMatrix::identity(n), CMatrix(n, n)); }

QMatrix QMatrix::from_entries(const HMatrix& e) {
  if (!e.square()) throw DomainError("QMatrix: entries must be square");
  const std::size_t n = e.rows();
  CMatrix a(n, n), b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = part1(e(r, c));
      b(r, c) = part2(e(r, c));
    }
  return QMatrix(std::move(a), std::move(b));
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> d) {
  return from_entries(HMatrix::diagonal(d));
}

QMatrix QMatrix::left_scalar(std::size_t n, const Quaternion& q) {
  return from_entries(HMatrix::identity(n).times_left(q));
}

QMatrix QMatrix::outer(std::span<const Quaternion> u, std::span<const Quaternion> v) {
  require_same_dim(u.size(), v.size(), "outer");
  const std::size_t n = u.size();
  HMatrix e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e(r, c) = u[r] * conj(v[c]);
  return from_entries(e);
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  const std::size_t n = cols.size();
  HMatrix e(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    require_same_dim(cols[c].size(), n, "from_columns");
    for (std::size_t r = 0; r < n; ++r) e(r, c) = cols[c][r];
  }
  return from_entries(e);
}

Quaternion QMatrix::entry(std::size_t r, std::size_t c) const { return assemble(a_(r, c), b_(r, c)); }

HMatrix QMatrix::entries() const {
  const std::size_t n = dim();
  HMatrix e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e(r, c) = entry(r, c);
  return e;
}

QVector QMatrix::column(std::size_t c) const {
  QVector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = entry(r, c);
  return out;
}

QVector QMatrix::apply(std::span<const Quaternion> x) const {
  const std::size_t n = dim();
  require_same_dim(x.size(), n, "QMatrix::apply");
  // (A + Bj)(x1 + x2 j) = (A x1 - B conj(x2)) + (A x2 + B conj(x1)) j
  QVector y(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex y1{}, y2{};
    for (std::size_t c = 0; c < n; ++c) {
      const Complex x1 = part1(x[c]), x2 = part2(x[c]);
      y1 += a_(r, c) * x1 - b_(r, c) * std::conj(x2);
      y2 += a_(r, c) * x2 + b_(r, c) * std::conj(x1);
    }
    y[r] = assemble(y1, y2);
  }
  return y;
}

QMatrix QMatrix::adjoint() const {
  // conj(a + b j) = conj(a) - b j, so T^* = A^H - B^T j
  return QMatrix(a_.adjoint(), -b_.transpose());
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  require_same_dim(x.dim(), y.dim(), "QMatrix product");
  // (A1 + B1 j)(A2 + B2 j) = (A1 A2 - B1 conj(B2)) + (A1 B2 + B1 conj(A2)) j
  return QMatrix(x.a_ * y.a_ - x.b_ * y.b_.conjugate(), x.a_ * y.b_ + x.b_ * y.a_.conjugate());
}

double QMatrix::frobenius() const { return std::hypot(a_.frobenius(), b_.frobenius()); }

CMatrix chi(const QMatrix& t) {
  const std::size_t n = t.dim();
  CMatrix c(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      c(r, k) = t.a()(r, k);
      c(r, n + k) = -t.b()(r, k);
      c(n + r, k) = std::conj(t.b()(r, k));
      c(n + r, n + k) = std::conj(t.a()(r, k));
    }
  return c;
}

QMatrix from_chi(const CMatrix& c) {
  if (!c.square() || c.rows() % 2 != 0) throw DomainError("from_chi: need an even square matrix");
  const std::size_t n = c.rows() / 2;
  CMatrix a(n, n), b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      a(r, k) = c(r, k);
      b(r, k) = std::conj(c(n + r, k));
    }
  return QMatrix(std::move(a), std::move(b));
}

double opnorm(const QMatrix& t) { return linalg::opnorm(chi(t)); }

namespace {

double scale_of(const QMatrix& t) { return std::max(1.0, opnorm(t)); }

}  // namespace

bool is_selfadjoint(const QMatrix& t, double tol) {
  return linalg::opnorm(chi(t - t.adjoint())) <= tol * scale_of(t);
}

bool is_antiselfadjoint(const QMatrix& t, double tol) {
  return linalg::opnorm(chi(t + t.adjoint())) <= tol * scale_of(t);
}

bool is_positive(const QMatrix& t, double tol) {
  if (!is_selfadjoint(t, tol)) return false;
  const auto eig = linalg::herm_eig(chi(t), 1.0);
  return eig.values.back() >= -tol * scale_of(t);
}

bool is_normal(const QMatrix& t, double tol) {
  const QMatrix ts = t.adjoint();
  const double s = scale_of(t);
  return opnorm(t * ts - ts * t) <= tol * s * s;
}

bool is_unitary(const QMatrix& t, double tol) {
  const QMatrix i = QMatrix::identity(t.dim());
  return opnorm(t.adjoint() * t - i) <= tol && opnorm(t * t.adjoint() - i) <= tol;
}

QEigen selfadjoint_eigen(const QMatrix& t, double tol) {
  if (!is_selfadjoint(t, tol)) throw DomainError("selfadjoint_eigen: operator is not selfadjoint");
  // average with the adjoint so the Jacobi input is exactly Hermitian
  HMatrix h = ((t + t.adjoint()) * 0.5).entries();
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, i) = Quaternion(h(i, i).w);
  auto r = detail::hermitian_jacobi(std::move(h));
  QEigen out{std::move(r.values), {}};
  for (std::size_t k = 0; k < out.values.size(); ++k) out.vectors.push_back(r.vectors.column(k));
  return out;
}

QMatrix spectral_synthesis(std::span<const double> values, const std::vector<QVector>& vectors) {
  if (values.size() != vectors.size()) throw DomainError("spectral_synthesis: size mismatch");
  const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
  HMatrix e(n, n);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& v = vectors[k];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) e(r, c) += v[r] * values[k] * conj(v[c]);
  }
  return QMatrix::from_entries(e);
}

namespace {

QMatrix positive_function(const QMatrix& t, double (*f)(double, double), double arg, const char* what) {
  if (!is_positive(t)) throw DomainError(std::string(what) + ": operator is not positive");
  QEigen e = selfadjoint_eigen(t);
  // eigenvalues at rounding level are kernel; pow(1e-17, 0.3) would otherwise be 1e-5
  const double cut = 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(t.dim()) *
                     (e.values.empty() ? 0.0 : std::max(e.values.front(), 0.0));
  for (auto& v : e.values) v = v <= cut ? f(0.0, arg) : f(v, arg);
  return spectral_synthesis(e.values, e.vectors);
}

}  // namespace

QMatrix sqrt_pos(const QMatrix& t) {
  return positive_function(t, [](double v, double) { return std::sqrt(v); }, 0.0, "sqrt_pos");
}

QMatrix frac_power(const QMatrix& t, double p) {
  if (!(p > 0.0)) throw DomainError("frac_power: exponent must be positive");
  if (p == 1.0) {
    if (!is_positive(t)) throw DomainError("frac_power: operator is not positive");
    return t;
  }
  return positive_function(t, [](double v, double e) { return std::pow(v, e); }, p, "frac_power");
}

QSvd qsvd(const QMatrix& t) {
  auto r = detail::one_sided_jacobi(t.entries());
  QSvd out;
  out.sigmas = std::move(r.sigma);
  for (std::size_t k = 0; k < out.sigmas.size(); ++k) {
    out.left_basis.push_back(r.u.column(k));
    out.right_basis.push_back(r.v.column(k));
  }
  return out;
}

QMatrix abs(const QMatrix& t) {
  const QSvd d = qsvd(t);
  return spectral_synthesis(d.sigmas, d.right_basis);
}

Polar polar(const QMatrix& t) {
  const QSvd d = qsvd(t);
  const std::size_t n = t.dim();
  const double smax = d.sigmas.empty() ? 0.0 : d.sigmas.front();
  HMatrix w(n, n);
  for (std::size_t k = 0; k < d.sigmas.size(); ++k) {
    if (!(d.sigmas[k] > 1e-12 * smax)) continue;
    const auto& u = d.left_basis[k];
    const auto& e = d.right_basis[k];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) w(r, c) += u[r] * conj(e[c]);
  }
  return {QMatrix::from_entries(w), spectral_synthesis(d.sigmas, d.right_basis)};
}

QMatrix svd_truncation(const QSvd& d, std::size_t k) {
  const std::size_t n = d.right_basis.empty() ? 0 : d.right_basis.front().size();
  HMatrix e(n, n);
  for (std::size_t m = 0; m < std::min(k, d.sigmas.size()); ++m) {
    const auto& u = d.left_basis[m];
    const auto& v = d.right_basis[m];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) e(r, c) += u[r] * d.sigmas[m] * conj(v[c]);
  }
  return QMatrix::from_entries(e);
}

std::vector<double> chi_singular_values(const QMatrix& t, double pair_tol) {
  const auto s = linalg::singular_values(chi(t));
  const double scale = std::max(1.0, s.empty() ? 0.0 : s.front());
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < s.size(); k += 2) {
    if (std::abs(s[k] - s[k + 1]) > pair_tol * scale)
      throw NumericalFailure("chi singular values are not paired");
    out.push_back(0.5 * (s[k] + s[k + 1]));
  }
  return out;
}

}  // namespace qslab
