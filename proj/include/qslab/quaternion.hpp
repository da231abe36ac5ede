#pragma once

// Quaternion arithmetic over doubles, slice coordinates and sphere geometry.
//
// Units follow the standard table e1 e2 = e3, e2 e3 = e1, e3 e1 = e2 with
// e_l^2 = -1 and pairwise anticommutation.

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>

namespace qslab {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

struct Quaternion {
  double w = 0.0;  // real part
  double x = 0.0;  // e1
  double y = 0.0;  // e2
  double z = 0.0;  // e3

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w(w_) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
  static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
  static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

  /// Real part plus imaginary vector.
  static constexpr Quaternion from_parts(double re, const Vec3& im) { return {re, im[0], im[1], im[2]}; }

  constexpr double re() const { return w; }
  constexpr Vec3 im() const { return {x, y, z}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

  // Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  constexpr Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
double norm(const Quaternion& q);
/// Same as norm(); lets generic code call abs() on complex and quaternion scalars alike.
inline double abs(const Quaternion& q) { return norm(q); }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Vec3 im(const Quaternion& q) { return q.im(); }
/// Throws DomainError for q == 0.
Quaternion inv(const Quaternion& q);

/// Distance |a - b|.
double dist(const Quaternion& a, const Quaternion& b);

/// An element of the imaginary unit sphere: zero real part, modulus one.
class UnitImaginary {
 public:
  /// Defaults to e1.
  UnitImaginary() = default;
  /// Normalizes `direction`; throws DomainError for a (near) zero vector.
  explicit UnitImaginary(const Vec3& direction);

  static UnitImaginary e1() { return UnitImaginary(); }
  static UnitImaginary e2() { return UnitImaginary(Vec3{0, 1, 0}); }
  static UnitImaginary e3() { return UnitImaginary(Vec3{0, 0, 1}); }

  const Vec3& direction() const { return dir_; }
  Quaternion quaternion() const { return {0, dir_[0], dir_[1], dir_[2]}; }
  operator Quaternion() const { return quaternion(); }  // NOLINT

  /// Embeds z = a + b*i of the slice C_i into H.
  Quaternion embed(Complex z) const { return {z.real(), z.imag() * dir_[0], z.imag() * dir_[1], z.imag() * dir_[2]}; }
  /// Coordinates of q in C_i: (Re q, <Im q, i>). Components orthogonal to C_i are dropped.
  Complex project(const Quaternion& q) const { return {q.w, q.x * dir_[0] + q.y * dir_[1] + q.z * dir_[2]}; }
  /// Norm of the part of q orthogonal to the slice C_i.
  double off_slice(const Quaternion& q) const;

  UnitImaginary operator-() const { return UnitImaginary(Vec3{-dir_[0], -dir_[1], -dir_[2]}); }

 private:
  Vec3 dir_{1.0, 0.0, 0.0};
};

/// A deterministic unit orthogonal to i (so that i, j, ij is a positive frame).
UnitImaginary orthogonal_unit(const UnitImaginary& i);

/// x = x0 + unit * x1 with x1 >= 0.
struct SlicePoint {
  double x0 = 0.0;
  double x1 = 0.0;
  UnitImaginary unit;

  Quaternion quaternion() const { return unit.embed({x0, x1}); }
  /// The point x0 + i*x1 in the slice C_i.
  Quaternion in_slice(const UnitImaginary& i) const { return i.embed({x0, x1}); }
};

/// For real q the unit is e1.
SlicePoint slice_decompose(const Quaternion& q);

/// Absolute tolerance on (Re, |Im|) used for sphere membership.
inline constexpr double kSphereTolerance = 1e-10;

/// Returns a unit quaternion q with q^-1 x q = y when x and y lie on the
/// same 2-sphere [x] (equal real part and |Im| within `tol`), nullopt otherwise.
std::optional<Quaternion> same_sphere(const Quaternion& x, const Quaternion& y, double tol = kSphereTolerance);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qslab
