#include "qslab/random.hpp"

#include <cmath>
#include <numbers>

namespace qslab {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) return 0;
  // rejection keeps the result unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = next_u64();
  while (v >= limit);
  return v % n;
}

Quaternion random_quaternion(Rng& rng) {
  const double w = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
  return {w, x, y, z};
}

Quaternion random_unit_quaternion(Rng& rng) {
  Quaternion q = random_quaternion(rng);
  while (norm(q) < 1e-8) q = random_quaternion(rng);
  return q / norm(q);
}

UnitImaginary random_unit_imaginary(Rng& rng) {
  while (true) {
    const double x = rng.normal(), y = rng.normal(), z = rng.normal();
    if (std::hypot(x, y, z) > 1e-8) return UnitImaginary(Vec3{x, y, z});
  }
}

Complex random_complex(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

Complex random_disk_point(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double t = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(r, t);
}

QVector random_qvector(Rng& rng, std::size_t n) {
  QVector v(n);
  for (auto& c : v) c = random_quaternion(rng);
  return v;
}

CMatrix random_cmatrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (auto& v : m.data()) v = random_complex(rng);
  return m;
}

QMatrix random_qmatrix(Rng& rng, std::size_t n) {
  HMatrix e(n, n);
  const double s = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
  for (auto& v : e.data()) v = random_quaternion(rng) * s;
  return QMatrix::from_entries(e);
}

QMatrix random_selfadjoint(Rng& rng, std::size_t n) {
  const QMatrix x = random_qmatrix(rng, n);
  return (x + x.adjoint()) * 0.5;
}

QMatrix random_positive(Rng& rng, std::size_t n) {
  const QMatrix x = random_qmatrix(rng, n);
  return x.adjoint() * x;
}

QMatrix random_unitary(Rng& rng, std::size_t n) { return QMatrix::from_columns(random_onb(rng, n)); }

QMatrix random_rank_k(Rng& rng, std::size_t n, std::size_t k) {
  QMatrix t(n);
  for (std::size_t m = 0; m < k; ++m) t += QMatrix::outer(random_qvector(rng, n), random_qvector(rng, n)) * (1.0 / n);
  return t;
}

std::vector<QVector> random_onb(Rng& rng, std::size_t n) {
  std::vector<QVector> basis;
  while (basis.size() < n) {
    std::vector<QVector> cand = basis;
    cand.push_back(random_qvector(rng, n));
    basis = gram_schmidt(cand);
  }
  return basis;
}

}  // namespace qslab
