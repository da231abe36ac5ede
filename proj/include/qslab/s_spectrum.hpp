#pragma once

// S-spectrum of a quaternionic matrix.
//
// s lies in the S-spectrum when the pencil Q_s(T) = T^2 - 2Re(s)T + |s|^2 I is
// not invertible. The set is a union of spheres [lambda]; each sphere meets the
// upper half of C_{e1} in exactly one point, and those points are the
// eigenvalues of chi(T) folded into the closed upper half-plane.

#include <vector>

#include "qslab/qmatrix.hpp"

namespace qslab {

struct SphereRep {
  Complex lambda;  // in C_{e1}, imag >= 0
  int multiplicity = 0;

  Quaternion quaternion() const { return UnitImaginary::e1().embed(lambda); }
};

struct SphereSpectrum {
  std::vector<SphereRep> representatives;  // sorted by (re, im)
  /// Largest distance between an eigenvalue of chi(T) and the conjugate of its partner.
  double pairing_defect = 0.0;

  /// True if s lies on one of the spheres (same_sphere tolerance).
  bool contains(const Quaternion& s, double tol = kSphereTolerance) const;
};

QMatrix q_pencil(const QMatrix& t, const Quaternion& s);

SphereSpectrum s_spectrum(const QMatrix& t);

/// Default tolerance for in_s_spectrum, scaled by 1 + ||T||^2.
inline constexpr double kSpectrumTolerance = 1e-8;

/// sigma_min(chi(Q_s(T))), the distance of the pencil from singularity.
double pencil_sigma_min(const QMatrix& t, const Quaternion& s);

/// sigma_min(chi(Q_s(T))) <= tol * (1 + ||T||^2)
bool in_s_spectrum(const QMatrix& t, const Quaternion& s, double tol = kSpectrumTolerance);

/// The pencil counts as singular when sigma_min <= tol * (1 + ||T||^2).
inline constexpr double kResolventTolerance = 1e-12;

/// -Q_s(T)^{-1} (T - conj(s) I). Scalars act by componentwise left
/// multiplication. Throws SingularMatrix (with sigma_min) on the spectrum.
QMatrix s_resolvent_left(const QMatrix& t, const Quaternion& s, double tol = kResolventTolerance);
/// -(T - conj(s) I) Q_s(T)^{-1}
QMatrix s_resolvent_right(const QMatrix& t, const Quaternion& s, double tol = kResolventTolerance);

struct PointSpectrumEntry {
  SphereRep rep;
  QVector eigenvector;      // T x = x lambda, ||x|| = 1
  double eigen_residual;    // ||T x - x lambda||
  double pencil_residual;   // ||Q_lambda(T) x||
};

/// In finite dimension the residual and continuous parts are always empty;
/// they are kept so the partition reads as in the infinite-dimensional theory.
struct SpectrumPartition {
  std::vector<PointSpectrumEntry> point;
  std::vector<SphereRep> residual;
  std::vector<SphereRep> continuous;
};

SpectrumPartition classify_spectrum(const QMatrix& t);

}  // namespace qslab
