#pragma once

// Weighted slice Bergman spaces A^2_{alpha,i}(D) truncated to degree N.
//
// Functions are stored by coefficients in the orthonormal basis
// e_n(z) = sqrt(w_n) z^n of the plane C_i. Operators commuting with J are
// stored by their complex matrix on span{e_0..e_N} plus one scalar acting on
// the orthogonal complement, so that the identity and J are represented
// exactly. Berezin transforms are taken against the exact (untruncated)
// normalized kernels.

#include <cstddef>
#include <vector>

#include "qslab/bound.hpp"
#include "qslab/matrix.hpp"
#include "qslab/qmatrix.hpp"
#include "qslab/quadrature.hpp"
#include "qslab/quaternion.hpp"
#include "qslab/slice_fn.hpp"

namespace qslab {

inline constexpr std::size_t kMaxTruncation = 64;

struct QuadratureResolution {
  std::size_t radial = 200;
  std::size_t angular = 256;
};

/// w_n = Gamma(n+alpha+2) / (Gamma(n+1) Gamma(alpha+2)), the reciprocal of
/// int |z^n|^2 dA_alpha.
double basis_weight(double alpha, std::size_t n);

class BergmanSpace {
 public:
  /// Throws DomainError for alpha <= -1 or N > kMaxTruncation.
  BergmanSpace(double alpha, std::size_t N, UnitImaginary unit = UnitImaginary::e1(),
               QuadratureResolution quad = {});

  double alpha() const { return alpha_; }
  std::size_t truncation() const { return n_; }
  std::size_t dim() const { return n_ + 1; }
  const UnitImaginary& unit() const { return unit_; }
  const std::vector<double>& weights() const { return weights_; }
  const DiskQuadrature& quadrature() const { return quad_; }

  /// 2 + alpha
  double kernel_exponent() const { return 2.0 + alpha_; }

 private:
  double alpha_;
  std::size_t n_;
  UnitImaginary unit_;
  std::vector<double> weights_;
  DiskQuadrature quad_;
};

/// (1 - z conj(w))^-(2+alpha), principal branch. Requires |z|, |w| < 1.
Complex complex_bergman_kernel(double alpha, Complex z, Complex w);

/// Slice hyperholomorphic kernel K_alpha(q, w), the representation-formula
/// extension in q of the complex kernel on the plane of w.
/// Throws DomainError unless |q|, |w| < 1.
Quaternion bergman_kernel(double alpha, const Quaternion& q, const Quaternion& w);
inline Quaternion bergman_kernel(const BergmanSpace& s, const Quaternion& q, const Quaternion& w) {
  return bergman_kernel(s.alpha(), q, w);
}

/// sum_{n <= N} w_n q^n conj(w)^n
Quaternion truncated_kernel(const BergmanSpace& s, const Quaternion& q, const Quaternion& w);

/// Coefficients sqrt(w_n) conj(z)^n of the truncated kernel K^(N)_z.
CVector kernel_coeffs(const BergmanSpace& s, Complex z);
/// K^(N)_z normalized to unit length.
CVector normalized_kernel_coeffs(const BergmanSpace& s, Complex z);
/// The first N+1 coefficients of the exact normalized kernel k_z.
CVector exact_kernel_head(const BergmanSpace& s, Complex z);
/// Squared norm of the part of k_z beyond degree N (summed directly, no cancellation).
double kernel_tail_mass(const BergmanSpace& s, Complex z);

/// Evaluates a coefficient vector as a function on the plane C_i.
Complex eval_coeffs(const BergmanSpace& s, std::span<const Complex> f, Complex z);

/// <f, g>_{2,alpha,i} of two left slice polynomials by quadrature on C_i.
Quaternion quadrature_inner(const BergmanSpace& s, const LeftSlicePoly& f, const LeftSlicePoly& g);

/// <K^(N)_w, f>_{2,alpha,i} by quadrature; equals f(w) for deg f <= N and any w in D.
Quaternion reproduce(const BergmanSpace& s, const LeftSlicePoly& f, const Quaternion& w);

/// Largest |<e_n, e_m> - delta_nm| under the quadrature.
double basis_gram_defect(const BergmanSpace& s);

/// sup over the given points of |K^(N)(z,w) - K(z,w)|.
double kernel_truncation_error(const BergmanSpace& s, std::span<const Complex> points);

/// T = M on span{e_0..e_N} and tail * I on its orthogonal complement.
struct BergOperator {
  CMatrix m;
  Complex tail = 0.0;

  static BergOperator zero(const BergmanSpace& s);
  static BergOperator identity(const BergmanSpace& s);
  /// J restricted to the plus space: multiplication by i.
  static BergOperator j_operator(const BergmanSpace& s);
  /// Finite section only (tail zero).
  static BergOperator section(CMatrix m);

  BergOperator adjoint() const;
  BergOperator& operator+=(const BergOperator& o);
  BergOperator& operator-=(const BergOperator& o);
  friend BergOperator operator+(BergOperator a, const BergOperator& b) { return a += b; }
  friend BergOperator operator-(BergOperator a, const BergOperator& b) { return a -= b; }
  /// Left multiplication by a scalar of C_i.
  friend BergOperator operator*(Complex c, const BergOperator& t);

  /// blockdiag(M, tail) when the tail is nonzero, M otherwise.
  CMatrix block() const;
};

/// Lifted quaternionic operator of block() under the standard structure on C_i.
QMatrix lifted(const BergmanSpace& s, const BergOperator& t);
/// Operator norm of the lifted operator.
double operator_norm(const BergmanSpace& s, const BergOperator& t);

struct BerezinSample {
  Complex z;
  Complex value;

  Quaternion quaternion(const UnitImaginary& i) const { return i.embed(value); }
};

/// <k_z, T k_z> against the exact normalized kernel. Throws DomainError for |z| >= 1.
BerezinSample berezin(const BergmanSpace& s, const BergOperator& t, Complex z);

/// The same value computed from the lifted quaternionic operator and the
/// quaternionic kernel vector in an exact kernel frame.
Quaternion berezin_quaternionic(const BergmanSpace& s, const BergOperator& t, Complex z);

/// Projection onto the truncated normalized kernel (a finite section).
BergOperator projection_pz(const BergmanSpace& s, Complex z);

/// Coordinates of exact normalized kernels k_{z_1..z_m} in span{e_0..e_N}
/// plus an orthonormal basis of their tails; the tails span an invariant
/// subspace of every BergOperator, on which it acts as the tail scalar.
struct KernelFrame {
  std::size_t head = 0;
  std::size_t extra = 0;
  std::vector<CVector> kernels;

  std::size_t dim() const { return head + extra; }
  CMatrix embed(const BergOperator& t) const;
  /// Exact P_{z_k} = k k^* on the frame.
  CMatrix projection(std::size_t k) const;
};
KernelFrame kernel_frame(const BergmanSpace& s, std::span<const Complex> points);

/// T~(z) against Tr_{Ji}(T P_z) with the exact P_z, plus Tr_{Ji}(P_z) = 1.
std::vector<Bound> cbaf_check(const BergmanSpace& s, const BergOperator& t, Complex z, double tol = 1e-10);

/// |<k_w, k_z>|^2 = (1 - rho(z,w)^2)^(2+alpha)
double kernel_overlap(double alpha, Complex z, Complex w);

/// ||P_z - P_w|| = (1 - |<k_w,k_z>|^2)^(1/2) and the trace norm twice that,
/// for the exact projections against the closed form and for the truncated
/// projections against their own overlap.
std::vector<Bound> projection_norm_check(const BergmanSpace& s, Complex z, Complex w, double tol = 1e-9);

struct TraceIntegral {
  Complex trace;        // Tr_{Ji}(T)
  Complex integral;     // (alpha+1) int T~ dmu_i
  double relative_error = 0.0;
  double richardson = 0.0;  // |full - half resolution| / |trace|
};

/// Requires a zero tail (trace class). For positive T this is the
/// trace-integral identity; for general T the C_i-linear version.
TraceIntegral trace_integral(const BergmanSpace& s, const BergOperator& t);

/// int (T~)^p dmu_i <= Tr(T^p)/(alpha+1) for positive T with zero tail, p >= 1.
Bound berezin_lp_check(const BergmanSpace& s, const BergOperator& t, double p, double tol = 1e-6);

double pseudo_hyperbolic(Complex z, Complex w);
double bergman_metric(Complex z, Complex w);

/// |T~(z) - T~(w)| <= 2 sqrt(2+alpha) ||T|| rho(z,w), and the same with beta.
std::vector<Bound> lipschitz_check(const BergmanSpace& s, const BergOperator& t, double norm, Complex z,
                                   Complex w, double tol = 1e-9);

/// r_k = sqrt(k/M), theta_k = 2 pi phi k.
std::vector<Complex> spiral_points(std::size_t count);

struct Injectivity {
  BergOperator recovered;
  double relative_error = 0.0;  // absolute when T = 0
  double condition = 0.0;
  std::size_t samples = 0;
};

/// Recovers T (matrix and tail) from Berezin samples by least squares.
Injectivity berezin_injectivity(const BergmanSpace& s, const BergOperator& t, std::size_t samples);

struct Density {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  std::size_t rank = 0;
  double orthogonal_residual = 0.0;
};

/// Gram matrix of the truncated kernels at the points and the part of a
/// fixed test function orthogonal to all of them.
Density density_check(const BergmanSpace& s, std::span<const Complex> points);

struct SliceNormComparison {
  double norm_i_p = 0.0;  // ||f||^p on C_i
  double norm_j_p = 0.0;  // ||f||^p on C_j
  std::vector<Bound> bounds;
};

/// Compares ||f||_{p,alpha,i}^p and ||f||_{p,alpha,j}^p by quadrature against
/// the equivalence constant 2^max(p,1).
SliceNormComparison slice_norm_comparison(const BergmanSpace& s, const LeftSlicePoly& f, const UnitImaginary& j,
                                          double p);

}  // namespace qslab
