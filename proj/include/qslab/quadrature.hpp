#pragma once

// Gauss rules on [0,1] and a tensor rule over the unit disk for the weighted
// area measure dA_alpha = (alpha+1)/pi (1-|z|^2)^alpha dm.

#include <cstddef>
#include <vector>

#include "qslab/quaternion.hpp"

namespace qslab {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Integrates (1-u)^a f(u) over [0,1]; exact for polynomials of degree < 2n.
/// Nodes from the Jacobi matrix (Golub-Welsch). Throws DomainError for a <= -1 or n == 0.
GaussRule gauss_jacobi_unit(std::size_t n, double a);

inline GaussRule gauss_legendre_unit(std::size_t n) { return gauss_jacobi_unit(n, 0.0); }

struct DiskNode {
  Complex z;
  double weight;
};

/// Tensor rule: Gauss-Jacobi in u = r^2 with weight (1-u)^alpha, trapezoid in
/// angle. Weights sum to one and integrate f dA_alpha exactly for
/// polynomials in z, conj(z) of degree < min(2 radial, angular) in each variable.
class DiskQuadrature {
 public:
  DiskQuadrature(double alpha, std::size_t radial, std::size_t angular);

  double alpha() const { return alpha_; }
  std::size_t radial() const { return radial_; }
  std::size_t angular() const { return angular_; }
  /// Radial-major order: node r * angular + a.
  const std::vector<DiskNode>& nodes() const { return nodes_; }

 private:
  double alpha_;
  std::size_t radial_;
  std::size_t angular_;
  std::vector<DiskNode> nodes_;
};

}  // namespace qslab
