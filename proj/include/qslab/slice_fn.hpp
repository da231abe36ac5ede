#pragma once

// Slice hyperholomorphic polynomials and the slice calculus around them.
//
// A left slice polynomial is f(x) = sum x^n a_n; a right one is
// f(x) = sum a_n x^n. On each slice C_i they restrict to a pair of complex
// polynomials, and their values off a slice follow from any one slice through
// the representation formula.

#include <functional>
#include <span>
#include <vector>

#include "qslab/quaternion.hpp"

namespace qslab {

inline constexpr std::size_t kMaxSliceDegree = 64;

/// f(x) = sum_n x^n a_n
class LeftSlicePoly {
 public:
  LeftSlicePoly() = default;
  /// Throws DomainError above kMaxSliceDegree.
  explicit LeftSlicePoly(std::vector<Quaternion> coeffs);
  const std::vector<Quaternion>& coeffs() const { return c_; }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

 private:
  std::vector<Quaternion> c_;
};

/// f(x) = sum_n a_n x^n
class RightSlicePoly {
 public:
  RightSlicePoly() = default;
  explicit RightSlicePoly(std::vector<Quaternion> coeffs);
  const std::vector<Quaternion>& coeffs() const { return c_; }

 private:
  std::vector<Quaternion> c_;
};

Quaternion eval_left(const LeftSlicePoly& f, const Quaternion& q);
Quaternion eval_right(const RightSlicePoly& f, const Quaternion& q);

/// f a + g, coefficientwise.
LeftSlicePoly axpy(const LeftSlicePoly& f, const Quaternion& a, const LeftSlicePoly& g);
/// Coefficients of the pointwise product f g for intrinsic f (real coefficients).
/// Throws DomainError if f is not intrinsic within 1e-14.
LeftSlicePoly intrinsic_product(const LeftSlicePoly& f, const LeftSlicePoly& g);

/// f(x) = 1/2 (1 - i_x i) f(x_i) + 1/2 (1 + i_x i) f(conj(x_i)) with x_i = x0 + i x1.
Quaternion representation_formula(const Quaternion& f_at_xi, const Quaternion& f_at_xbar, const UnitImaginary& i,
                                  const SlicePoint& target);
/// f(x) = f(x_i)(1 - i i_x)/2 + f(conj(x_i))(1 + i i_x)/2
Quaternion representation_formula_right(const Quaternion& f_at_xi, const Quaternion& f_at_xbar,
                                        const UnitImaginary& i, const SlicePoint& target);

/// Coefficients of the holomorphic pair on C_i (as complex numbers in C_i coordinates).
struct ComplexSplit {
  std::vector<Complex> f1;
  std::vector<Complex> f2;
};
/// Left: a_n = a_n^1 + a_n^2 j, so f_i = f1 + f2 j. Throws DomainError unless i is orthogonal to j.
ComplexSplit split(const LeftSlicePoly& f, const UnitImaginary& i, const UnitImaginary& j);
/// Right: a_n = a_n^1 + j a_n^2, so f_i = f1 + j f2.
ComplexSplit split(const RightSlicePoly& f, const UnitImaginary& i, const UnitImaginary& j);
LeftSlicePoly join_left(const ComplexSplit& s, const UnitImaginary& i, const UnitImaginary& j);
RightSlicePoly join_right(const ComplexSplit& s, const UnitImaginary& i, const UnitImaginary& j);

/// Complex polynomial evaluation sum c_n z^n.
Complex eval_complex(std::span<const Complex> c, Complex z);

LeftSlicePoly slice_derivative(const LeftSlicePoly& f);
RightSlicePoly slice_derivative(const RightSlicePoly& f);

/// Coefficients b_n = (1/n!) (d_S^n f)(alpha) at a real point, so that
/// f(x) = sum (x - alpha)^n b_n.
std::vector<Quaternion> taylor_at_real(const LeftSlicePoly& f, double alpha);

/// All coefficients have |Im a_n| <= tol.
bool is_intrinsic(const LeftSlicePoly& f, double tol = 1e-12);

using SliceFunction = std::function<Quaternion(const Quaternion&)>;

/// Finite-difference diagnostics of the slice structure at x0 + i x1.
/// alpha and beta are solved from the values on the planes C_i and C_k and
/// then tested on a third plane (form), for even/odd symmetry in x1
/// (symmetry), for the Cauchy-Riemann system (cauchy_riemann), and the
/// slicewise dbar operator is evaluated on C_i (dbar).
struct SliceDiagnostics {
  double form = 0.0;
  double symmetry = 0.0;
  double cauchy_riemann = 0.0;
  double dbar = 0.0;

  double max() const;
};

inline constexpr double kFiniteDifferenceStep = 1e-5;

/// Requires x1 > 0 and i != +-k.
SliceDiagnostics left_slice_diagnostics(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                                        const UnitImaginary& k, double h = kFiniteDifferenceStep);
SliceDiagnostics right_slice_diagnostics(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                                         const UnitImaginary& k, double h = kFiniteDifferenceStep);

/// Partial derivative of f in the real direction by central differences.
Quaternion real_partial(const SliceFunction& f, const Quaternion& q, double h = kFiniteDifferenceStep);

/// Values of a function on a grid in C_i that is symmetric about the real axis.
struct SliceSamples {
  UnitImaginary unit;
  std::vector<Complex> nodes;
  std::vector<Quaternion> values;
};

SliceSamples sample_plane(const SliceFunction& f, const UnitImaginary& i, std::vector<Complex> nodes);

/// Left slice extension of plane samples, evaluable on the axially symmetric
/// hull of the grid: q must satisfy q0 + i|Im q| = a grid node.
class SliceExtension {
 public:
  /// Throws DomainError if the grid is not closed under conjugation (tolerance 1e-14).
  explicit SliceExtension(SliceSamples samples);

  /// Throws DomainError when q is not on the hull of the grid.
  Quaternion operator()(const Quaternion& q) const;

 private:
  std::size_t node_index(Complex z) const;
  SliceSamples s_;
};

SliceExtension ext_left(SliceSamples samples);

}  // namespace qslab
