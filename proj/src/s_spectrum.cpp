#include "qslab/s_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"

namespace qslab {

namespace {

Complex fold(Complex z) { return {z.real(), std::abs(z.imag())}; }

bool less_lex(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

QMatrix left_conj_scalar(std::size_t n, const Quaternion& s) { return QMatrix::left_scalar(n, conj(s)); }

// Cluster radius for merging folded eigenvalues into one sphere. Eigenvalues
// of defective blocks scatter like sqrt(eps), so this is far above 1e-10.
constexpr double kClusterRadius = 1e-6;

}  // namespace

bool SphereSpectrum::contains(const Quaternion& s, double tol) const {
  for (const auto& r : representatives)
    if (same_sphere(r.quaternion(), s, tol)) return true;
  return false;
}

QMatrix q_pencil(const QMatrix& t, const Quaternion& s) {
  const std::size_t n = t.dim();
  return t * t - t * (2.0 * re(s)) + QMatrix::identity(n) * norm2(s);
}

SphereSpectrum s_spectrum(const QMatrix& t) {
  SphereSpectrum out;
  const std::size_t n = t.dim();
  if (n == 0) return out;
  CVector ev = linalg::eigenvalues(chi(t));
  std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
    const Complex fa = fold(a), fb = fold(b);
    if (fa != fb) return less_lex(fa, fb);
    return a.imag() < b.imag();
  });

  // pair every eigenvalue with the nearest unused conjugate partner
  std::vector<bool> used(ev.size(), false);
  std::vector<Complex> folded;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    if (used[k]) continue;
    used[k] = true;
    std::size_t best = k;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < ev.size(); ++m) {
      if (used[m]) continue;
      const double d = std::abs(ev[m] - std::conj(ev[k]));
      if (d < bd) bd = d, best = m;
    }
    if (best == k) throw NumericalFailure("s_spectrum: odd number of eigenvalues of chi(T)");
    used[best] = true;
    out.pairing_defect = std::max(out.pairing_defect, bd);
    folded.push_back(fold(0.5 * (ev[k] + std::conj(ev[best]))));
  }

  std::sort(folded.begin(), folded.end(), less_lex);
  const double radius = kClusterRadius * std::max(1.0, opnorm(t));
  std::vector<bool> taken(folded.size(), false);
  for (std::size_t k = 0; k < folded.size(); ++k) {
    if (taken[k]) continue;
    Complex sum = 0;
    int count = 0;
    for (std::size_t m = k; m < folded.size(); ++m) {
      if (taken[m] || std::abs(folded[m] - folded[k]) > radius) continue;
      taken[m] = true;
      sum += folded[m];
      ++count;
    }
    out.representatives.push_back({fold(sum / static_cast<double>(count)), count});
  }
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const SphereRep& a, const SphereRep& b) { return less_lex(a.lambda, b.lambda); });
  return out;
}

double pencil_sigma_min(const QMatrix& t, const Quaternion& s) { return linalg::sigma_min(chi(q_pencil(t, s))); }

bool in_s_spectrum(const QMatrix& t, const Quaternion& s, double tol) {
  const double nt = opnorm(t);
  return pencil_sigma_min(t, s) <= tol * (1.0 + nt * nt);
}

namespace {

QMatrix pencil_inverse(const QMatrix& t, const Quaternion& s, double tol) {
  const double nt = opnorm(t);
  const CMatrix q = chi(q_pencil(t, s));
  const double smin = linalg::sigma_min(q);
  if (smin <= tol * (1.0 + nt * nt)) throw SingularMatrix("S-resolvent evaluated on the S-spectrum", smin);
  return from_chi(linalg::inverse(q, 0.0));
}

}  // namespace

QMatrix s_resolvent_left(const QMatrix& t, const Quaternion& s, double tol) {
  const QMatrix qi = pencil_inverse(t, s, tol);
  return -1.0 * (qi * (t - left_conj_scalar(t.dim(), s)));
}

QMatrix s_resolvent_right(const QMatrix& t, const Quaternion& s, double tol) {
  const QMatrix qi = pencil_inverse(t, s, tol);
  return -1.0 * ((t - left_conj_scalar(t.dim(), s)) * qi);
}

SpectrumPartition classify_spectrum(const QMatrix& t) {
  SpectrumPartition out;
  const CMatrix c = chi(t);
  for (const SphereRep& r : s_spectrum(t).representatives) {
    CMatrix shifted = c;
    for (std::size_t k = 0; k < c.rows(); ++k) shifted(k, k) -= r.lambda;
    const QVector x = unembed(linalg::null_vector(shifted));
    const Quaternion l = r.quaternion();
    PointSpectrumEntry e{r, x, qnorm(sub(t.apply(x), scale_right(x, l))), qnorm(q_pencil(t, l).apply(x))};
    out.point.push_back(std::move(e));
  }
  return out;
}

}  // namespace qslab
