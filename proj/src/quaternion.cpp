#include "qslab/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qslab/errors.hpp"

namespace qslab {

double norm(const Quaternion& q) {
  // hypot-style scaling keeps tiny and huge inputs finite
  const double m = std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  if (m == 0.0) return 0.0;
  const Quaternion s = q / m;
  return m * std::sqrt(norm2(s));
}

Quaternion inv(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) throw DomainError("quaternion inverse of zero");
  return conj(q) / n2;
}

double dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }

namespace {

double vnorm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }
double vdot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 vcross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

UnitImaginary::UnitImaginary(const Vec3& direction) {
  const double n = vnorm(direction);
  if (!(n > 1e-300) || !std::isfinite(n)) throw DomainError("imaginary unit needs a nonzero finite direction");
  dir_ = {direction[0] / n, direction[1] / n, direction[2] / n};
}

double UnitImaginary::off_slice(const Quaternion& q) const {
  const Vec3 v = q.im();
  const double along = vdot(v, dir_);
  return vnorm({v[0] - along * dir_[0], v[1] - along * dir_[1], v[2] - along * dir_[2]});
}

UnitImaginary orthogonal_unit(const UnitImaginary& i) {
  const Vec3& d = i.direction();
  // project e2 out of i, or e3 when i is close to e2; e1 maps to e2
  const Vec3 axis = std::abs(d[1]) < 0.9 ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
  const double along = vdot(axis, d);
  return UnitImaginary(Vec3{axis[0] - along * d[0], axis[1] - along * d[1], axis[2] - along * d[2]});
}

SlicePoint slice_decompose(const Quaternion& q) {
  const Vec3 v = q.im();
  const double x1 = vnorm(v);
  if (x1 == 0.0) return {q.w, 0.0, UnitImaginary::e1()};
  return {q.w, x1, UnitImaginary(v)};
}

std::optional<Quaternion> same_sphere(const Quaternion& x, const Quaternion& y, double tol) {
  const Vec3 vx = x.im();
  const Vec3 vy = y.im();
  const double rx = vnorm(vx);
  const double ry = vnorm(vy);
  if (std::abs(x.w - y.w) > tol || std::abs(rx - ry) > tol) return std::nullopt;
  if (rx <= tol || ry <= tol) return Quaternion(1.0);

  const Vec3 u{vx[0] / rx, vx[1] / rx, vx[2] / rx};
  const Vec3 v{vy[0] / ry, vy[1] / ry, vy[2] / ry};
  // r rotates u onto v via r u r^-1; the witness is q = conj(r) so that q^-1 x q = r x r^-1.
  Quaternion r;
  const double c = vdot(u, v);
  if (c < -1.0 + 1e-12) {
    // antipodal: half turn about any axis orthogonal to u
    Vec3 axis = vcross(u, Vec3{1, 0, 0});
    if (vnorm(axis) < 1e-6) axis = vcross(u, Vec3{0, 1, 0});
    const double a = vnorm(axis);
    r = {0, axis[0] / a, axis[1] / a, axis[2] / a};
  } else {
    r = Quaternion::from_parts(1.0 + c, vcross(u, v));
    r /= norm(r);
  }
  return conj(r);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "e1, " << q.y << "e2, " << q.z << "e3)";
}

}  // namespace qslab
