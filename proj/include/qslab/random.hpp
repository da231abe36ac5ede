#pragma once

// Seeded random streams and random operator factories.
//
// The generator is SplitMix64 (Steele, Lea & Flood): a 64-bit counter advanced
// by the golden-ratio increment and passed through a fixed mixing function.
// Normals come from Box-Muller on 53-bit uniforms rather than the standard
// library distributions, whose output is implementation-defined, so a seed
// reproduces the same stream on every platform.

#include <cstdint>
#include <vector>

#include "qslab/matrix.hpp"
#include "qslab/qmatrix.hpp"

namespace qslab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Independent stream derived from this one (consumes one draw).
  Rng split() { return Rng(next_u64() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Quaternion random_quaternion(Rng& rng);
/// Uniform on the unit 3-sphere.
Quaternion random_unit_quaternion(Rng& rng);
UnitImaginary random_unit_imaginary(Rng& rng);
Complex random_complex(Rng& rng);
/// Uniform in the disk |z| <= radius.
Complex random_disk_point(Rng& rng, double radius);

QVector random_qvector(Rng& rng, std::size_t n);
CMatrix random_cmatrix(Rng& rng, std::size_t rows, std::size_t cols);
/// Entries are independent standard quaternion Gaussians scaled by 1/sqrt(n).
QMatrix random_qmatrix(Rng& rng, std::size_t n);
QMatrix random_selfadjoint(Rng& rng, std::size_t n);
/// X^* X for random X.
QMatrix random_positive(Rng& rng, std::size_t n);
QMatrix random_unitary(Rng& rng, std::size_t n);
/// Random matrix of rank <= k.
QMatrix random_rank_k(Rng& rng, std::size_t n, std::size_t k);
/// Orthonormal basis of H^n from Gram-Schmidt on Gaussian vectors.
std::vector<QVector> random_onb(Rng& rng, std::size_t n);

}  // namespace qslab
