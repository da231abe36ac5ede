#include "qslab/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"
#include "qslab/j_structure.hpp"
#include "qslab/parallel.hpp"
#include "qslab/schatten.hpp"

namespace qslab {

namespace {

void check_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(what) + ": point must lie in the open unit disk");
}

// sum_{n > N} w_n x^n for |x| < 1
Complex tail_series(double alpha, std::size_t N, Complex x) {
  if (x == Complex(0.0)) return 0.0;
  std::size_t n = N + 1;
  Complex term = basis_weight(alpha, n) * std::pow(x, static_cast<double>(n));
  Complex sum = 0.0;
  for (std::size_t it = 0; it < 1000000; ++it, ++n) {
    sum += term;
    const double ratio = std::abs(x) * (static_cast<double>(n) + alpha + 2.0) / static_cast<double>(n + 1);
    if (ratio < 1.0 && std::abs(term) <= 1e-18 * std::abs(sum)) return sum;
    term *= x * ((static_cast<double>(n) + alpha + 2.0) / static_cast<double>(n + 1));
  }
  throw NumericalFailure("kernel tail series did not converge");
}

// (1 - |z|^2)^((2+alpha)/2), the reciprocal square root of K(z,z)
double kernel_scale(double alpha, Complex z) { return std::pow(1.0 - std::norm(z), 0.5 * (2.0 + alpha)); }

const ComplexStructure& structure_for(const UnitImaginary& unit, std::size_t dim) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, double, double, double>, ComplexStructure> cache;
  const Vec3& d = unit.direction();
  const auto key = std::make_tuple(dim, d[0], d[1], d[2]);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, standard_j(dim, unit)).first;
  return it->second;
}

CMatrix outer(const CVector& u) {
  CMatrix m(u.size(), u.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c) m(r, c) = u[r] * std::conj(u[c]);
  return m;
}

Complex quadratic_form(const CMatrix& m, const CVector& c) {
  Complex s = 0.0;
  for (std::size_t r = 0; r < c.size(); ++r) {
    Complex row = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) row += m(r, k) * c[k];
    s += std::conj(c[r]) * row;
  }
  return s;
}

void check_operator(const BergmanSpace& s, const BergOperator& t) {
  if (t.m.rows() != s.dim() || t.m.cols() != s.dim()) throw DomainError("operator size does not match the space");
}

// (alpha+1) int T~ dmu_i = int T~ K dA_alpha under the given rule
Complex berezin_integral(const BergmanSpace& s, const BergOperator& t, const DiskQuadrature& q, double p) {
  const auto& nodes = q.nodes();
  std::vector<Complex> ring(q.radial());
  parallel_for(q.radial(), [&](std::size_t r) {
    Complex acc = 0.0;
    for (std::size_t a = 0; a < q.angular(); ++a) {
      const DiskNode& node = nodes[r * q.angular() + a];
      const Complex v = berezin(s, t, node.z).value;
      const double k = std::pow(1.0 - std::norm(node.z), -s.kernel_exponent());
      acc += node.weight * k * (p == 1.0 ? v : Complex(std::pow(std::max(v.real(), 0.0), p)));
    }
    ring[r] = acc;
  });
  Complex total = 0.0;
  for (Complex v : ring) total += v;
  return total;
}

std::vector<double> section_eigenvalues(const BergOperator& t) {
  if (t.tail != Complex(0.0)) throw DomainError("operator is not trace class (nonzero tail)");
  return linalg::herm_eig(t.m, 1e-9).values;
}

}  // namespace

double basis_weight(double alpha, std::size_t n) {
  const double x = static_cast<double>(n);
  return std::exp(std::lgamma(x + alpha + 2.0) - std::lgamma(x + 1.0) - std::lgamma(alpha + 2.0));
}

BergmanSpace::BergmanSpace(double alpha, std::size_t N, UnitImaginary unit, QuadratureResolution quad)
    : alpha_(alpha),
      n_(N),
      unit_(unit),
      quad_((alpha > -1.0 ? alpha : 0.0), std::max<std::size_t>(quad.radial, 1), std::max<std::size_t>(quad.angular, 1)) {
  if (!(alpha > -1.0)) throw DomainError("BergmanSpace: alpha must exceed -1");
  if (N > kMaxTruncation) throw DomainError("BergmanSpace: truncation degree above 64");
  if (quad.radial == 0 || quad.angular == 0) throw DomainError("BergmanSpace: empty quadrature");
  weights_.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) weights_[n] = basis_weight(alpha, n);
}

Complex complex_bergman_kernel(double alpha, Complex z, Complex w) {
  check_disk(z, "bergman kernel");
  check_disk(w, "bergman kernel");
  const Complex base = 1.0 - z * std::conj(w);
  // |z conj(w)| < 1 keeps the base in the right half plane, away from the branch cut
  if (!(base.real() > 0.0)) throw NumericalFailure("bergman kernel: base left the right half plane");
  return std::pow(base, -(2.0 + alpha));
}

Quaternion bergman_kernel(double alpha, const Quaternion& q, const Quaternion& w) {
  if (!(norm(q) < 1.0) || !(norm(w) < 1.0)) throw DomainError("bergman kernel: points must lie in the open unit ball");
  const SlicePoint pw = slice_decompose(w);
  const SlicePoint pq = slice_decompose(q);
  const UnitImaginary& iw = pw.unit;
  const Complex wc{pw.x0, pw.x1};
  const Complex z{pq.x0, pq.x1};
  const Quaternion fz = iw.embed(complex_bergman_kernel(alpha, z, wc));
  const Quaternion fzb = iw.embed(complex_bergman_kernel(alpha, std::conj(z), wc));
  return representation_formula(fz, fzb, iw, pq);
}

Quaternion truncated_kernel(const BergmanSpace& s, const Quaternion& q, const Quaternion& w) {
  std::vector<Quaternion> c(s.dim());
  Quaternion wb(1.0);
  for (std::size_t n = 0; n < s.dim(); ++n) {
    c[n] = s.weights()[n] * wb;
    wb = wb * conj(w);
  }
  return eval_left(LeftSlicePoly(std::move(c)), q);
}

CVector kernel_coeffs(const BergmanSpace& s, Complex z) {
  check_disk(z, "kernel_coeffs");
  CVector c(s.dim());
  Complex p = 1.0;
  for (std::size_t n = 0; n < s.dim(); ++n) {
    c[n] = std::sqrt(s.weights()[n]) * p;
    p *= std::conj(z);
  }
  return c;
}

CVector normalized_kernel_coeffs(const BergmanSpace& s, Complex z) {
  CVector c = kernel_coeffs(s, z);
  const double nrm = vector_norm<Complex>(c);
  for (auto& v : c) v /= nrm;
  return c;
}

CVector exact_kernel_head(const BergmanSpace& s, Complex z) {
  CVector c = kernel_coeffs(s, z);
  const double sc = kernel_scale(s.alpha(), z);
  for (auto& v : c) v *= sc;
  return c;
}

double kernel_tail_mass(const BergmanSpace& s, Complex z) {
  check_disk(z, "kernel_tail_mass");
  const double sc = kernel_scale(s.alpha(), z);
  return sc * sc * tail_series(s.alpha(), s.truncation(), std::norm(z)).real();
}

Complex eval_coeffs(const BergmanSpace& s, std::span<const Complex> f, Complex z) {
  if (f.size() != s.dim()) throw DomainError("eval_coeffs: coefficient count does not match the space");
  Complex r = 0.0;
  for (std::size_t n = f.size(); n-- > 0;) r = r * z + std::sqrt(s.weights()[n]) * f[n];
  return r;
}

Quaternion quadrature_inner(const BergmanSpace& s, const LeftSlicePoly& f, const LeftSlicePoly& g) {
  Quaternion acc;
  for (const DiskNode& node : s.quadrature().nodes()) {
    const Quaternion z = s.unit().embed(node.z);
    acc += node.weight * (conj(eval_left(f, z)) * eval_left(g, z));
  }
  return acc;
}

Quaternion reproduce(const BergmanSpace& s, const LeftSlicePoly& f, const Quaternion& w) {
  Quaternion acc;
  for (const DiskNode& node : s.quadrature().nodes()) {
    const Quaternion z = s.unit().embed(node.z);
    acc += node.weight * (conj(truncated_kernel(s, z, w)) * eval_left(f, z));
  }
  return acc;
}

double basis_gram_defect(const BergmanSpace& s) {
  const std::size_t d = s.dim();
  CMatrix g(d, d);
  CVector e(d);
  for (const DiskNode& node : s.quadrature().nodes()) {
    Complex p = 1.0;
    for (std::size_t n = 0; n < d; ++n) {
      e[n] = std::sqrt(s.weights()[n]) * p;
      p *= node.z;
    }
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) g(r, c) += node.weight * std::conj(e[r]) * e[c];
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) worst = std::max(worst, std::abs(g(r, c) - (r == c ? 1.0 : 0.0)));
  return worst;
}

double kernel_truncation_error(const BergmanSpace& s, std::span<const Complex> points) {
  double worst = 0.0;
  for (Complex z : points) {
    for (Complex w : points) {
      const Complex x = z * std::conj(w);
      Complex head = 0.0, p = 1.0;
      for (std::size_t n = 0; n < s.dim(); ++n) {
        head += s.weights()[n] * p;
        p *= x;
      }
      worst = std::max(worst, std::abs(head - complex_bergman_kernel(s.alpha(), z, w)));
    }
  }
  return worst;
}

BergOperator BergOperator::zero(const BergmanSpace& s) { return {CMatrix(s.dim(), s.dim()), 0.0}; }

BergOperator BergOperator::identity(const BergmanSpace& s) { return {CMatrix::identity(s.dim()), 1.0}; }

BergOperator BergOperator::j_operator(const BergmanSpace& s) {
  const Complex i{0.0, 1.0};
  return {CMatrix::identity(s.dim()).times_left(i), i};
}

BergOperator BergOperator::section(CMatrix m) {
  if (!m.square()) throw DomainError("BergOperator: section must be square");
  return {std::move(m), 0.0};
}

BergOperator BergOperator::adjoint() const { return {m.adjoint(), std::conj(tail)}; }

BergOperator& BergOperator::operator+=(const BergOperator& o) {
  m += o.m;
  tail += o.tail;
  return *this;
}

BergOperator& BergOperator::operator-=(const BergOperator& o) {
  m -= o.m;
  tail -= o.tail;
  return *this;
}

BergOperator operator*(Complex c, const BergOperator& t) { return {t.m.times_left(c), c * t.tail}; }

CMatrix BergOperator::block() const {
  if (tail == Complex(0.0)) return m;
  const std::size_t d = m.rows();
  CMatrix b(d + 1, d + 1);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) b(r, c) = m(r, c);
  b(d, d) = tail;
  return b;
}

QMatrix lifted(const BergmanSpace& s, const BergOperator& t) {
  check_operator(s, t);
  const CMatrix b = t.block();
  return lift_ji(b, structure_for(s.unit(), b.rows()));
}

double operator_norm(const BergmanSpace& s, const BergOperator& t) { return opnorm(lifted(s, t)); }

BerezinSample berezin(const BergmanSpace& s, const BergOperator& t, Complex z) {
  check_disk(z, "berezin");
  check_operator(s, t);
  const CVector c = exact_kernel_head(s, z);
  Complex v = quadratic_form(t.m, c);
  if (t.tail != Complex(0.0)) v += t.tail * kernel_tail_mass(s, z);
  return {z, v};
}

Quaternion berezin_quaternionic(const BergmanSpace& s, const BergOperator& t, Complex z) {
  check_disk(z, "berezin");
  check_operator(s, t);
  const Complex pts[] = {z};
  const KernelFrame f = kernel_frame(s, pts);
  const ComplexStructure& cs = structure_for(s.unit(), f.dim());
  const QMatrix q = lift_ji(f.embed(t), cs);
  QVector x(f.dim());
  for (std::size_t n = 0; n < f.dim(); ++n) x = add(x, scale_right(cs.plus_basis()[n], s.unit().embed(f.kernels[0][n])));
  return qinner(x, q.apply(x));
}

BergOperator projection_pz(const BergmanSpace& s, Complex z) {
  return BergOperator::section(outer(normalized_kernel_coeffs(s, z)));
}

CMatrix KernelFrame::embed(const BergOperator& t) const {
  CMatrix b(dim(), dim());
  for (std::size_t r = 0; r < head; ++r)
    for (std::size_t c = 0; c < head; ++c) b(r, c) = t.m(r, c);
  for (std::size_t k = head; k < dim(); ++k) b(k, k) = t.tail;
  return b;
}

CMatrix KernelFrame::projection(std::size_t k) const { return outer(kernels.at(k)); }

KernelFrame kernel_frame(const BergmanSpace& s, std::span<const Complex> points) {
  const std::size_t m = points.size();
  KernelFrame f;
  f.head = s.dim();
  std::vector<double> scale(m);
  for (std::size_t a = 0; a < m; ++a) {
    check_disk(points[a], "kernel_frame");
    scale[a] = kernel_scale(s.alpha(), points[a]);
  }
  CMatrix g(m, m);
  double gmax = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      g(a, b) = scale[a] * scale[b] * tail_series(s.alpha(), s.truncation(), points[a] * std::conj(points[b]));
    }
    gmax = std::max(gmax, g(a, a).real());
  }
  // t_a,r = sqrt(lambda_r) conj(V_ar) reproduces <t_a, t_b> = G_ab
  std::vector<CVector> tails(m);
  if (gmax > 0.0) {
    const linalg::HermEig eg = linalg::herm_eig(g * (1.0 / gmax), 1e-8);
    for (std::size_t r = 0; r < m; ++r) {
      if (!(eg.values[r] > 1e-15)) break;
      ++f.extra;
      const double root = std::sqrt(eg.values[r] * gmax);
      for (std::size_t a = 0; a < m; ++a) tails[a].push_back(root * std::conj(eg.vectors(a, r)));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    CVector k = exact_kernel_head(s, points[a]);
    k.insert(k.end(), tails[a].begin(), tails[a].end());
    f.kernels.push_back(std::move(k));
  }
  return f;
}

std::vector<Bound> cbaf_check(const BergmanSpace& s, const BergOperator& t, Complex z, double tol) {
  const Complex pts[] = {z};
  const KernelFrame f = kernel_frame(s, pts);
  const ComplexStructure& cs = structure_for(s.unit(), f.dim());
  const CMatrix p = f.projection(0);
  const Complex tr_tp = ji_trace(lift_ji(f.embed(t) * p, cs), cs).value;
  const Complex tr_p = ji_trace(lift_ji(p, cs), cs).value;
  const Complex b = berezin(s, t, z).value;
  return {{"berezin equals Tr(T P_z)", std::abs(tr_tp - b), 0.0, tol},
          {"Tr(P_z) = 1", std::abs(tr_p - 1.0), 0.0, tol}};
}

double kernel_overlap(double alpha, Complex z, Complex w) {
  check_disk(z, "kernel_overlap");
  check_disk(w, "kernel_overlap");
  const double one_minus_rho2 = (1.0 - std::norm(z)) * (1.0 - std::norm(w)) / std::norm(1.0 - z * std::conj(w));
  return std::pow(one_minus_rho2, 2.0 + alpha);
}

std::vector<Bound> projection_norm_check(const BergmanSpace& s, Complex z, Complex w, double tol) {
  std::vector<Bound> out;
  const auto measure = [&](const CMatrix& d, double closed, const std::string& tag) {
    const QMatrix q = lift_ji(d, structure_for(s.unit(), d.rows()));
    out.push_back(equality(tag + ": ||P_z - P_w||", opnorm(q), closed, tol));
    out.push_back(equality(tag + ": ||P_z - P_w||_1", schatten_norm(q, 1.0), 2.0 * closed, tol));
  };

  const Complex pts[] = {z, w};
  const KernelFrame f = kernel_frame(s, pts);
  // 1 - (1 - rho^2)^(2+alpha) without cancellation
  const double rho = pseudo_hyperbolic(z, w);
  const double gap = -std::expm1(s.kernel_exponent() * std::log1p(-rho * rho));
  measure(f.projection(0) - f.projection(1), std::sqrt(std::max(gap, 0.0)), "exact kernels");

  const CVector u = normalized_kernel_coeffs(s, z);
  const CVector v = normalized_kernel_coeffs(s, w);
  const Complex vu = inner<Complex>(v, u);
  double resid = 0.0;  // ||u - v <v,u>||^2 = 1 - |<v,u>|^2
  for (std::size_t n = 0; n < u.size(); ++n) resid += std::norm(u[n] - v[n] * vu);
  measure(outer(u) - outer(v), std::sqrt(resid), "truncated kernels");
  return out;
}

TraceIntegral trace_integral(const BergmanSpace& s, const BergOperator& t) {
  check_operator(s, t);
  if (t.tail != Complex(0.0)) throw DomainError("trace_integral: operator is not trace class (nonzero tail)");
  TraceIntegral r;
  r.trace = t.m.trace();
  r.integral = berezin_integral(s, t, s.quadrature(), 1.0);
  const DiskQuadrature half(s.alpha(), std::max<std::size_t>(1, s.quadrature().radial() / 2),
                            std::max<std::size_t>(1, s.quadrature().angular() / 2));
  const Complex coarse = berezin_integral(s, t, half, 1.0);
  const double scale = std::abs(r.trace) > 0.0 ? std::abs(r.trace) : 1.0;
  r.relative_error = std::abs(r.trace - r.integral) / scale;
  r.richardson = std::abs(r.integral - coarse) / scale;
  return r;
}

Bound berezin_lp_check(const BergmanSpace& s, const BergOperator& t, double p, double tol) {
  check_operator(s, t);
  if (!(p >= 1.0)) throw DomainError("berezin_lp_check: p must be at least 1");
  const std::vector<double> ev = section_eigenvalues(t);
  double trace_p = 0.0;
  for (double l : ev) {
    if (l < -1e-10 * std::max(1.0, std::abs(ev.front()))) throw DomainError("berezin_lp_check: operator is not positive");
    trace_p += std::pow(std::max(l, 0.0), p);
  }
  const double a1 = s.alpha() + 1.0;
  const double lhs = berezin_integral(s, t, s.quadrature(), p).real() / a1;
  return {"int (T~)^p dmu <= Tr(T^p)/(alpha+1)", lhs, trace_p / a1, tol};
}

double pseudo_hyperbolic(Complex z, Complex w) {
  check_disk(z, "pseudo_hyperbolic");
  check_disk(w, "pseudo_hyperbolic");
  return std::abs(z - w) / std::abs(1.0 - z * std::conj(w));
}

double bergman_metric(Complex z, Complex w) { return std::atanh(pseudo_hyperbolic(z, w)); }

std::vector<Bound> lipschitz_check(const BergmanSpace& s, const BergOperator& t, double norm, Complex z,
                                   Complex w, double tol) {
  const double lhs = std::abs(berezin(s, t, z).value - berezin(s, t, w).value);
  const double c = 2.0 * std::sqrt(s.kernel_exponent()) * norm;
  return {{"|T~(z) - T~(w)| <= 2 sqrt(2+alpha) ||T|| rho", lhs, c * pseudo_hyperbolic(z, w), tol},
          {"|T~(z) - T~(w)| <= 2 sqrt(2+alpha) ||T|| beta", lhs, c * bergman_metric(z, w), tol}};
}

std::vector<Complex> spiral_points(std::size_t count) {
  std::vector<Complex> pts;
  pts.reserve(count);
  const double phi = std::numbers::phi;
  for (std::size_t k = 0; k < count; ++k) {
    const double r = std::sqrt(static_cast<double>(k) / static_cast<double>(count));
    const double theta = 2.0 * std::numbers::pi * std::fmod(phi * static_cast<double>(k), 1.0);
    pts.push_back(std::polar(r, theta));
  }
  return pts;
}

Injectivity berezin_injectivity(const BergmanSpace& s, const BergOperator& t, std::size_t samples) {
  check_operator(s, t);
  const std::size_t d = s.dim();
  const std::size_t unknowns = d * d + 1;
  if (samples < unknowns) throw DomainError("berezin_injectivity: fewer samples than unknowns");
  const std::vector<Complex> pts = spiral_points(samples);
  CMatrix a(samples, unknowns);
  CVector rhs(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const CVector c = exact_kernel_head(s, pts[k]);
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t n = 0; n < d; ++n) a(k, m * d + n) = std::conj(c[m]) * c[n];
    a(k, d * d) = kernel_tail_mass(s, pts[k]);
    rhs[k] = berezin(s, t, pts[k]).value;
  }
  // equilibrate columns so the condition estimate reflects the geometry, not the weights
  std::vector<double> col(unknowns, 0.0);
  for (std::size_t j = 0; j < unknowns; ++j) {
    for (std::size_t k = 0; k < samples; ++k) col[j] += std::norm(a(k, j));
    col[j] = col[j] > 0.0 ? std::sqrt(col[j]) : 1.0;
    for (std::size_t k = 0; k < samples; ++k) a(k, j) /= col[j];
  }
  const linalg::LeastSquares ls = linalg::least_squares(a, rhs);
  Injectivity out;
  out.samples = samples;
  out.condition = ls.condition;
  out.recovered = BergOperator::zero(s);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) out.recovered.m(m, n) = ls.x[m * d + n] / col[m * d + n];
  out.recovered.tail = ls.x[d * d] / col[d * d];

  const BergOperator diff = out.recovered - t;
  const double err = std::hypot(diff.m.frobenius(), std::abs(diff.tail));
  const double ref = std::hypot(t.m.frobenius(), std::abs(t.tail));
  out.relative_error = ref > 0.0 ? err / ref : err;
  return out;
}

Density density_check(const BergmanSpace& s, std::span<const Complex> points) {
  const std::size_t d = s.dim();
  CMatrix k(d, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) k.set_column(c, kernel_coeffs(s, points[c]));
  const std::vector<double> sv = linalg::singular_values(k.adjoint() * k);
  Density out;
  if (!sv.empty()) {
    out.sigma_max = sv.front();
    out.sigma_min = sv.back();
    out.rank = static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [&](double v) { return v > 1e-12 * out.sigma_max; }));
  }
  const CVector f(d, Complex(1.0 / std::sqrt(static_cast<double>(d))));
  CVector proj = k.apply(linalg::pinv(k).apply(f));
  double r = 0.0;
  for (std::size_t n = 0; n < d; ++n) r += std::norm(f[n] - proj[n]);
  out.orthogonal_residual = std::sqrt(r);
  return out;
}

SliceNormComparison slice_norm_comparison(const BergmanSpace& s, const LeftSlicePoly& f, const UnitImaginary& j,
                                          double p) {
  if (!(p > 0.0)) throw DomainError("slice_norm_comparison: p must be positive");
  SliceNormComparison out;
  for (const DiskNode& node : s.quadrature().nodes()) {
    out.norm_i_p += node.weight * std::pow(norm(eval_left(f, s.unit().embed(node.z))), p);
    out.norm_j_p += node.weight * std::pow(norm(eval_left(f, j.embed(node.z))), p);
  }
  const double c = std::pow(2.0, std::max(p, 1.0));
  out.bounds.push_back({"||f||_i^p <= 2^max(p,1) ||f||_j^p", out.norm_i_p, c * out.norm_j_p, 1e-12});
  out.bounds.push_back({"||f||_j^p <= 2^max(p,1) ||f||_i^p", out.norm_j_p, c * out.norm_i_p, 1e-12});
  return out;
}

}  // namespace qslab
