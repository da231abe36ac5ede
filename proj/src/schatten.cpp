#include "qslab/schatten.hpp"

#include <algorithm>
#include <cmath>

#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"

namespace qslab {

namespace {

void require_positive_exponent(double p) {
  if (!(p > 0.0)) throw DomainError("Schatten exponent must be positive");
}

QVector combine(const std::vector<QVector>& basis, std::span<const Complex> c, const UnitImaginary& i) {
  QVector out(basis.front().size());
  for (std::size_t m = 0; m < basis.size(); ++m) out = add(out, scale_right(basis[m], i.embed(c[m])));
  return out;
}

double scale_of(double v) { return std::max(1.0, std::abs(v)); }

}  // namespace

SchattenContext::SchattenContext(ComplexStructure s, double p_) : structure(std::move(s)), p(p_) {
  require_positive_exponent(p);
}

double lp_norm(std::span<const double> v, double p) {
  require_positive_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  // scale by the largest entry to keep pow in range
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("conjugate exponent requires p >= 1");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double schatten_norm(const QMatrix& t, double p) {
  require_positive_exponent(p);
  if (std::isinf(p)) return opnorm(t);
  return lp_norm(qsvd(t).sigmas, p);
}

double schatten_norm(const CMatrix& m, double p) {
  require_positive_exponent(p);
  if (std::isinf(p)) return linalg::opnorm(m);
  return lp_norm(linalg::singular_values(m), p);
}

TraceValue ji_trace(const QMatrix& t, const ComplexStructure& s, double tol) {
  const double c = commutator_norm(t, s.j());
  if (c > tol * std::max(1.0, opnorm(t))) throw NonCommuting("Ji-trace of an operator that does not commute with J", c);
  return {s.unit().project(basis_trace(t, s.plus_basis())), s.unit()};
}

Quaternion basis_trace(const QMatrix& t, const std::vector<QVector>& basis) {
  Quaternion sum;
  for (const QVector& e : basis) sum += qinner(e, t.apply(e));
  return sum;
}

BasisSweep trace_basis_sweep(const QMatrix& t, Rng& rng, int num_bases) {
  const std::size_t n = t.dim();
  BasisSweep out;
  std::vector<QVector> canonical(n, QVector(n));
  for (std::size_t k = 0; k < n; ++k) canonical[k][k] = Quaternion(1.0);
  out.values.push_back(basis_trace(t, canonical));
  for (int b = 0; b < num_bases; ++b) {
    out.values.push_back(basis_trace(t, random_onb(rng, n)));
    out.max_deviation = std::max(out.max_deviation, dist(out.values.back(), out.values.front()));
  }
  return out;
}

UnitChange trace_unit_change(const QMatrix& t, const ComplexStructure& si, const ComplexStructure& sj) {
  if ((si.j() - sj.j()).frobenius() > 1e-12 * std::max(1.0, si.j().frobenius()))
    throw DomainError("trace_unit_change: structures use different operators J");
  UnitChange out;
  const TraceValue ti = ji_trace(t, si);
  out.trace_i = ti.quaternion();
  out.trace_j = ji_trace(t, sj).quaternion();
  out.phi_trace_i = sj.unit().embed(ti.value);
  out.error = dist(out.trace_j, out.phi_trace_i);
  return out;
}

HoelderResult hoelder_check(const QMatrix& t, const QMatrix& s, double p, double q, const ComplexStructure& cs,
                            double tol) {
  if (!(p >= 1.0)) throw DomainError("Hoelder check requires p >= 1");
  const double inv_sum = 1.0 / p + (std::isinf(q) ? 0.0 : 1.0 / q);
  if (std::abs(inv_sum - 1.0) > 1e-12) throw DomainError("Hoelder check requires conjugate exponents");
  HoelderResult out;
  const QMatrix ts = t * s, st = s * t;
  out.commutator_ts = commutator_norm(ts, cs.j());
  out.commutator_st = commutator_norm(st, cs.j());
  out.trace_ts = ji_trace(ts, cs);
  out.trace_st = ji_trace(st, cs);
  const double rhs = schatten_norm(t, p) * schatten_norm(s, q);
  out.bound = {"|Tr(TS)| <= ||T||_p ||S||_q", std::abs(out.trace_ts.value), rhs, tol * scale_of(rhs)};
  return out;
}

DualResult dual_norm(const QMatrix& t, double p, const ComplexStructure& cs, Rng& rng, int num_probes) {
  if (!(p >= 1.0) || std::isinf(p)) throw DomainError("dual_norm requires 1 <= p < inf");
  const double q = conjugate_exponent(p);
  const std::size_t n = t.dim();
  const CMatrix m = res_ji(t, cs);
  DualResult out;
  out.norm_p = schatten_norm(t, p);

  // S = V diag(sigma^{p-1}) U^* / ||sigma^{p-1}||_q, so Tr(S T) = sum sigma^p
  const linalg::Svd d = linalg::svd(m);
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = p == 1.0 ? 1.0 : std::pow(d.sigma[k], p - 1.0);
  const double wn = lp_norm(w, q);
  CMatrix sc(n, n);
  if (wn > 0.0) {
    CMatrix dw(n, n);
    for (std::size_t k = 0; k < n; ++k) dw(k, k) = w[k] / wn;
    sc = d.v * dw * d.u.adjoint();
  }
  out.optimizer = lift_ji(sc, cs);
  out.optimizer_value = std::abs(ji_trace(out.optimizer * t, cs).value);

  for (int k = 0; k < num_probes; ++k) {
    CMatrix r = random_cmatrix(rng, n, n);
    r *= 1.0 / schatten_norm(r, q);
    const QMatrix s = lift_ji(r, cs);
    out.sup_estimate = std::max(out.sup_estimate, std::abs(ji_trace(s * t, cs).value));
  }
  return out;
}

IdealResult ideal_check(const QMatrix& t, const QMatrix& s, double p, const ComplexStructure& cs, double tol) {
  IdealResult out;
  const QMatrix ts = t * s, st = s * t;
  out.commutator_ts = commutator_norm(ts, cs.j());
  out.commutator_st = commutator_norm(st, cs.j());
  const double bound = schatten_norm(t, p) * opnorm(s);
  out.ts = {"||TS||_p <= ||T||_p ||S||", schatten_norm(ts, p), bound, tol * scale_of(bound)};
  out.st = {"||ST||_p <= ||S|| ||T||_p", schatten_norm(st, p), bound, tol * scale_of(bound)};
  return out;
}

std::vector<QVector> random_plus_family(const ComplexStructure& s, Rng& rng, std::size_t k) {
  const std::size_t n = s.dim();
  const CMatrix u = linalg::svd(random_cmatrix(rng, n, n)).u;
  std::vector<QVector> out;
  for (std::size_t c = 0; c < std::min(k, n); ++c) out.push_back(combine(s.plus_basis(), u.column(c), s.unit()));
  return out;
}

Bound power_inequality(const QMatrix& t, std::span<const Quaternion> x, double p, double tol) {
  const double lin = qinner(x, t.apply(x)).w;
  const double pw = qinner(x, frac_power(t, p).apply(x)).w;
  const double linp = std::pow(std::max(lin, 0.0), p);
  const double sc = tol * scale_of(std::max(pw, linp));
  if (p >= 1.0) return {"<x, T^p x> >= <x, T x>^p", linp, pw, sc};
  return {"<x, T^p x> <= <x, T x>^p", pw, linp, sc};
}

std::vector<Bound> characterization_suite(const QMatrix& t, double p, const ComplexStructure& cs, Rng& rng,
                                          int num_sets, double tol) {
  require_positive_exponent(p);
  std::vector<Bound> out;
  const std::size_t n = t.dim();
  const UnitImaginary& i = cs.unit();
  const CMatrix m = res_ji(t, cs);
  const double np = std::pow(schatten_norm(t, p), p);
  const double sc = tol * scale_of(np);

  // ||T||_p^p = || |T| ||_p^p = || |T|^p ||_1 = ||T^*T||_{p/2}^{p/2}
  const QMatrix at = abs(t);
  out.push_back(equality("||T||_p^p = |||T|||_p^p", np, std::pow(schatten_norm(at, p), p), sc));
  out.push_back(equality("||T||_p^p = |||T|^p||_1", np, schatten_norm(frac_power(at, p), 1.0), sc));
  out.push_back(
      equality("||T||_p^p = ||T^*T||_{p/2}^{p/2}", np, std::pow(schatten_norm(t.adjoint() * t, p / 2), p / 2), sc));

  const linalg::Svd d = linalg::svd(m);
  std::vector<QVector> right, left;
  for (std::size_t k = 0; k < n; ++k) {
    right.push_back(combine(cs.plus_basis(), d.v.column(k), i));
    left.push_back(combine(cs.plus_basis(), d.u.column(k), i));
  }

  for (int r = 0; r < num_sets; ++r) {
    const std::size_t k = 1 + rng.below(n);
    const auto es = random_plus_family(cs, rng, k);
    const auto ss = random_plus_family(cs, rng, k);
    const auto onb = random_plus_family(cs, rng, n);
    if (p >= 1.0) {
      double diag = 0.0, bil = 0.0;
      for (std::size_t a = 0; a < k; ++a) {
        diag += std::pow(norm(qinner(es[a], t.apply(es[a]))), p);
        bil += std::pow(norm(qinner(ss[a], t.apply(es[a]))), p);
      }
      out.push_back({"sum |<e_n, T e_n>|^p <= ||T||_p^p", diag, np, sc});
      out.push_back({"sum |<s_n, T e_n>|^p <= ||T||_p^p", bil, np, sc});
    }
    if (p <= 2.0) {
      double dsum = 0.0;
      for (const auto& a : onb)
        for (const auto& b : onb) dsum += std::pow(norm(qinner(a, t.apply(b))), p);
      out.push_back({"||T||_p^p <= sum_k sum_n |<e_k, T e_n>|^p", np, dsum, sc});
    }
    if (p >= 2.0) {
      double cols = 0.0;
      for (const auto& a : es) cols += std::pow(qnorm(t.apply(a)), p);
      out.push_back({"sum ||T e_n||^p <= ||T||_p^p", cols, np, sc});
    }
    const QVector x = random_qvector(rng, n);
    const QVector ux = scale_right(x, Quaternion(1.0 / qnorm(x)));
    out.push_back(power_inequality(at, ux, p, tol));
  }

  // the suprema are attained on eigen and singular vectors
  if (p >= 1.0) {
    double bil = 0.0;
    for (std::size_t a = 0; a < n; ++a) bil += std::pow(norm(qinner(left[a], t.apply(right[a]))), p);
    out.push_back(equality("sup over singular vector pairs = ||T||_p^p", bil, np, sc));
    if (is_selfadjoint(t)) {
      const linalg::HermEig e = linalg::herm_eig(m);
      double diag = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        const QVector v = combine(cs.plus_basis(), e.vectors.column(a), i);
        diag += std::pow(norm(qinner(v, t.apply(v))), p);
      }
      out.push_back(equality("sup over eigenvectors of selfadjoint T = ||T||_p^p", diag, np, sc));
    }
  }
  if (p == 2.0) {
    double dsum = 0.0;
    for (const auto& a : cs.plus_basis())
      for (const auto& b : cs.plus_basis()) dsum += norm2(qinner(a, t.apply(b)));
    out.push_back(equality("||T||_2^2 = sum_k sum_n |<e_k, T e_n>|^2", np, dsum, sc));
  }
  if (p >= 2.0) {
    double cols = 0.0;
    for (const auto& a : right) cols += std::pow(qnorm(t.apply(a)), p);
    out.push_back(equality("sup of sum ||T e_n||^p over right singular vectors = ||T||_p^p", cols, np, sc));
  }
  return out;
}

}  // namespace qslab
