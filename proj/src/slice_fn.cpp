#include "qslab/slice_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qslab/errors.hpp"

namespace qslab {

namespace {

void check_degree(std::size_t n) {
  if (n > kMaxSliceDegree + 1) {
    throw DomainError("slice polynomial degree " + std::to_string(n - 1) + " exceeds " +
                      std::to_string(kMaxSliceDegree));
  }
}

void check_orthogonal(const UnitImaginary& i, const UnitImaginary& j) {
  const Vec3& a = i.direction();
  const Vec3& b = j.direction();
  if (std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) > 1e-12) {
    throw DomainError("split: j must be orthogonal to i");
  }
}

// binomial(m, n) as a double; m <= 64 keeps this exact enough
double binomial(std::size_t m, std::size_t n) {
  double r = 1.0;
  for (std::size_t t = 1; t <= n; ++t) r = r * static_cast<double>(m - n + t) / static_cast<double>(t);
  return r;
}

struct Components {
  Quaternion alpha;
  Quaternion beta;
};

// alpha, beta from f(x0 + i x1) and f(x0 + k x1)
Components left_components(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                           const UnitImaginary& k) {
  const Quaternion fi = f(i.embed({x0, x1}));
  const Quaternion fk = f(k.embed({x0, x1}));
  const Quaternion beta = inv(i.quaternion() - k.quaternion()) * (fi - fk);
  return {fi - i.quaternion() * beta, beta};
}

Components right_components(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                            const UnitImaginary& k) {
  const Quaternion fi = f(i.embed({x0, x1}));
  const Quaternion fk = f(k.embed({x0, x1}));
  const Quaternion beta = (fi - fk) * inv(i.quaternion() - k.quaternion());
  return {fi - beta * i.quaternion(), beta};
}

UnitImaginary third_unit(const UnitImaginary& i, const UnitImaginary& k) {
  const Vec3& a = i.direction();
  const Vec3& b = k.direction();
  const Vec3 s{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  if (std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]) < 1e-3) return orthogonal_unit(i);
  return UnitImaginary(s);
}

void check_units(double x1, const UnitImaginary& i, const UnitImaginary& k) {
  if (!(x1 > 0.0)) throw DomainError("slice diagnostics need x1 > 0");
  const Vec3& a = i.direction();
  const Vec3& b = k.direction();
  if (std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) > 1.0 - 1e-6) {
    throw DomainError("slice diagnostics need two distinct planes");
  }
}

template <class Solve, class Combine, class Dbar>
SliceDiagnostics diagnostics(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                             const UnitImaginary& k, double h, Solve solve, Combine combine, Dbar dbar_op) {
  check_units(x1, i, k);
  SliceDiagnostics d;
  const Components c = solve(f, x0, x1, i, k);

  const UnitImaginary m = third_unit(i, k);
  d.form = norm(f(m.embed({x0, x1})) - combine(c, m));

  const Components r = solve(f, x0, -x1, i, k);
  d.symmetry = std::max(norm(c.alpha - r.alpha), norm(c.beta + r.beta));

  const Components p0 = solve(f, x0 + h, x1, i, k);
  const Components m0 = solve(f, x0 - h, x1, i, k);
  const Components p1 = solve(f, x0, x1 + h, i, k);
  const Components m1 = solve(f, x0, x1 - h, i, k);
  const double s = 0.5 / h;
  const Quaternion da0 = (p0.alpha - m0.alpha) * s;
  const Quaternion db0 = (p0.beta - m0.beta) * s;
  const Quaternion da1 = (p1.alpha - m1.alpha) * s;
  const Quaternion db1 = (p1.beta - m1.beta) * s;
  d.cauchy_riemann = std::max(norm(da0 - db1), norm(db0 + da1));

  const Quaternion d0 = (f(i.embed({x0 + h, x1})) - f(i.embed({x0 - h, x1}))) * s;
  const Quaternion d1 = (f(i.embed({x0, x1 + h})) - f(i.embed({x0, x1 - h}))) * s;
  d.dbar = 0.5 * norm(dbar_op(d0, d1, i.quaternion()));
  return d;
}

}  // namespace

LeftSlicePoly::LeftSlicePoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { check_degree(c_.size()); }

RightSlicePoly::RightSlicePoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { check_degree(c_.size()); }

Quaternion eval_left(const LeftSlicePoly& f, const Quaternion& q) {
  const auto& a = f.coeffs();
  Quaternion r;
  for (std::size_t n = a.size(); n-- > 0;) r = q * r + a[n];
  return r;
}

Quaternion eval_right(const RightSlicePoly& f, const Quaternion& q) {
  const auto& a = f.coeffs();
  Quaternion r;
  for (std::size_t n = a.size(); n-- > 0;) r = r * q + a[n];
  return r;
}

LeftSlicePoly axpy(const LeftSlicePoly& f, const Quaternion& a, const LeftSlicePoly& g) {
  std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) c[n] += f.coeffs()[n] * a;
  for (std::size_t n = 0; n < g.coeffs().size(); ++n) c[n] += g.coeffs()[n];
  return LeftSlicePoly(std::move(c));
}

LeftSlicePoly intrinsic_product(const LeftSlicePoly& f, const LeftSlicePoly& g) {
  if (!is_intrinsic(f, 1e-14)) throw DomainError("intrinsic_product: first factor must have real coefficients");
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  if (a.empty() || b.empty()) return {};
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t m = 0; m < b.size(); ++m) c[n + m] += a[n].w * b[m];
  }
  return LeftSlicePoly(std::move(c));
}

Quaternion representation_formula(const Quaternion& f_at_xi, const Quaternion& f_at_xbar, const UnitImaginary& i,
                                  const SlicePoint& target) {
  const Quaternion ixi = target.unit.quaternion() * i.quaternion();
  return 0.5 * ((1.0 - ixi) * f_at_xi + (1.0 + ixi) * f_at_xbar);
}

Quaternion representation_formula_right(const Quaternion& f_at_xi, const Quaternion& f_at_xbar,
                                        const UnitImaginary& i, const SlicePoint& target) {
  const Quaternion iix = i.quaternion() * target.unit.quaternion();
  return 0.5 * (f_at_xi * (1.0 - iix) + f_at_xbar * (1.0 + iix));
}

ComplexSplit split(const LeftSlicePoly& f, const UnitImaginary& i, const UnitImaginary& j) {
  check_orthogonal(i, j);
  ComplexSplit s;
  const Quaternion jq = j.quaternion();
  for (const Quaternion& a : f.coeffs()) {
    const Complex a1 = i.project(a);
    // a - a1 = a2 j  =>  a2 = (a - a1) j^-1 = -(a - a1) j
    const Complex a2 = i.project(-(a - i.embed(a1)) * jq);
    s.f1.push_back(a1);
    s.f2.push_back(a2);
  }
  return s;
}

ComplexSplit split(const RightSlicePoly& f, const UnitImaginary& i, const UnitImaginary& j) {
  check_orthogonal(i, j);
  ComplexSplit s;
  const Quaternion jq = j.quaternion();
  for (const Quaternion& a : f.coeffs()) {
    const Complex a1 = i.project(a);
    const Complex a2 = i.project(-jq * (a - i.embed(a1)));
    s.f1.push_back(a1);
    s.f2.push_back(a2);
  }
  return s;
}

LeftSlicePoly join_left(const ComplexSplit& s, const UnitImaginary& i, const UnitImaginary& j) {
  check_orthogonal(i, j);
  if (s.f1.size() != s.f2.size()) throw DomainError("join: component lengths differ");
  std::vector<Quaternion> c;
  for (std::size_t n = 0; n < s.f1.size(); ++n) c.push_back(i.embed(s.f1[n]) + i.embed(s.f2[n]) * j.quaternion());
  return LeftSlicePoly(std::move(c));
}

RightSlicePoly join_right(const ComplexSplit& s, const UnitImaginary& i, const UnitImaginary& j) {
  check_orthogonal(i, j);
  if (s.f1.size() != s.f2.size()) throw DomainError("join: component lengths differ");
  std::vector<Quaternion> c;
  for (std::size_t n = 0; n < s.f1.size(); ++n) c.push_back(i.embed(s.f1[n]) + j.quaternion() * i.embed(s.f2[n]));
  return RightSlicePoly(std::move(c));
}

Complex eval_complex(std::span<const Complex> c, Complex z) {
  Complex r = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) r = z * r + c[n];
  return r;
}

LeftSlicePoly slice_derivative(const LeftSlicePoly& f) {
  const auto& a = f.coeffs();
  if (a.size() <= 1) return {};
  std::vector<Quaternion> c(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) c[n - 1] = static_cast<double>(n) * a[n];
  return LeftSlicePoly(std::move(c));
}

RightSlicePoly slice_derivative(const RightSlicePoly& f) {
  const auto& a = f.coeffs();
  if (a.size() <= 1) return {};
  std::vector<Quaternion> c(a.size() - 1);
  for (std::size_t n = 1; n < a.size(); ++n) c[n - 1] = static_cast<double>(n) * a[n];
  return RightSlicePoly(std::move(c));
}

std::vector<Quaternion> taylor_at_real(const LeftSlicePoly& f, double alpha) {
  // x^m = sum_n C(m,n) alpha^(m-n) (x - alpha)^n since alpha is real
  const auto& a = f.coeffs();
  std::vector<Quaternion> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t m = n; m < a.size(); ++m) {
      b[n] += binomial(m, n) * std::pow(alpha, static_cast<double>(m - n)) * a[m];
    }
  }
  return b;
}

bool is_intrinsic(const LeftSlicePoly& f, double tol) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [tol](const Quaternion& a) {
    return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z) <= tol;
  });
}

double SliceDiagnostics::max() const { return std::max({form, symmetry, cauchy_riemann, dbar}); }

SliceDiagnostics left_slice_diagnostics(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                                        const UnitImaginary& k, double h) {
  return diagnostics(
      f, x0, x1, i, k, h, left_components,
      [](const Components& c, const UnitImaginary& m) { return c.alpha + m.quaternion() * c.beta; },
      [](const Quaternion& d0, const Quaternion& d1, const Quaternion& iq) { return d0 + iq * d1; });
}

SliceDiagnostics right_slice_diagnostics(const SliceFunction& f, double x0, double x1, const UnitImaginary& i,
                                         const UnitImaginary& k, double h) {
  return diagnostics(
      f, x0, x1, i, k, h, right_components,
      [](const Components& c, const UnitImaginary& m) { return c.alpha + c.beta * m.quaternion(); },
      [](const Quaternion& d0, const Quaternion& d1, const Quaternion& iq) { return d0 + d1 * iq; });
}

Quaternion real_partial(const SliceFunction& f, const Quaternion& q, double h) {
  return (f(q + Quaternion(h)) - f(q - Quaternion(h))) * (0.5 / h);
}

SliceSamples sample_plane(const SliceFunction& f, const UnitImaginary& i, std::vector<Complex> nodes) {
  SliceSamples s{i, std::move(nodes), {}};
  s.values.reserve(s.nodes.size());
  for (Complex z : s.nodes) s.values.push_back(f(i.embed(z)));
  return s;
}

SliceExtension::SliceExtension(SliceSamples samples) : s_(std::move(samples)) {
  if (s_.nodes.size() != s_.values.size()) throw DomainError("ext_left: nodes and values differ in length");
  for (Complex z : s_.nodes) {
    const Complex zb = std::conj(z);
    const double tol = 1e-14 * std::max(1.0, std::abs(z));
    const bool found = std::any_of(s_.nodes.begin(), s_.nodes.end(),
                                   [&](Complex w) { return std::abs(w - zb) <= tol; });
    if (!found) throw DomainError("ext_left: grid is not symmetric about the real axis");
  }
}

std::size_t SliceExtension::node_index(Complex z) const {
  const double tol = 1e-12 * std::max(1.0, std::abs(z));
  std::size_t best = s_.nodes.size();
  double best_d = tol;
  for (std::size_t t = 0; t < s_.nodes.size(); ++t) {
    const double d = std::abs(s_.nodes[t] - z);
    if (d <= best_d) {
      best = t;
      best_d = d;
    }
  }
  if (best == s_.nodes.size()) throw DomainError("ext_left: point is off the symmetric hull of the grid");
  return best;
}

Quaternion SliceExtension::operator()(const Quaternion& q) const {
  const UnitImaginary& i = s_.unit;
  if (i.off_slice(q) <= 1e-15 * std::max(1.0, norm(q))) return s_.values[node_index(i.project(q))];
  const SlicePoint p = slice_decompose(q);
  const Quaternion fz = s_.values[node_index({p.x0, p.x1})];
  const Quaternion fzb = s_.values[node_index({p.x0, -p.x1})];
  return representation_formula(fz, fzb, i, p);
}

SliceExtension ext_left(SliceSamples samples) { return SliceExtension(std::move(samples)); }

}  // namespace qslab
