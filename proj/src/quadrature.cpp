#include "qslab/quadrature.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "qslab/errors.hpp"

namespace qslab {

namespace {

// Implicit QL on a symmetric tridiagonal matrix. d: diagonal, e: off-diagonal
// (e[k] couples k and k+1, e.back() unused). z tracks the first row of the
// eigenvector matrix, which is all Golub-Welsch needs.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw NumericalFailure("tridiagonal QL did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

GaussRule gauss_jacobi_unit(std::size_t n, double a) {
  if (n == 0) throw DomainError("gauss_jacobi_unit: need at least one node");
  if (!(a > -1.0)) throw DomainError("gauss_jacobi_unit: exponent must exceed -1");
  // Jacobi matrix for (1-x)^a on [-1,1] (b = 0), mapped to u = (1+x)/2 afterwards.
  const double b = 0.0;
  std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
  z[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 2.0 * static_cast<double>(k) + a + b;
    d[k] = k == 0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + a + b;
    const double beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    e[k - 1] = std::sqrt(beta);
  }
  tridiagonal_ql(d, e, z);

  // mu0 = int_{-1}^{1} (1-x)^a dx; the map to [0,1] divides by 2^(a+1)
  const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
  GaussRule rule;
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
  for (std::size_t k : order) {
    rule.nodes.push_back(0.5 * (1.0 + d[k]));
    rule.weights.push_back(mu0 * z[k] * z[k] / std::pow(2.0, a + 1.0));
  }
  return rule;
}

DiskQuadrature::DiskQuadrature(double alpha, std::size_t radial, std::size_t angular)
    : alpha_(alpha), radial_(radial), angular_(angular) {
  if (angular == 0) throw DomainError("DiskQuadrature: need at least one angular node");
  const GaussRule g = gauss_jacobi_unit(radial, alpha);
  // (alpha+1)/pi (1-r^2)^alpha r dr dtheta = (alpha+1)/(2 pi) (1-u)^alpha du dtheta
  const double scale = (alpha + 1.0) / static_cast<double>(angular);
  nodes_.reserve(radial * angular);
  for (std::size_t r = 0; r < radial; ++r) {
    const double rad = std::sqrt(g.nodes[r]);
    for (std::size_t t = 0; t < angular; ++t) {
      const double theta = 2.0 * std::numbers::pi * (static_cast<double>(t) + 0.5) / static_cast<double>(angular);
      nodes_.push_back({std::polar(rad, theta), scale * g.weights[r]});
    }
  }
}

}  // namespace qslab
