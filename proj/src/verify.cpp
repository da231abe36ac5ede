#include "qslab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "qslab/complex_linalg.hpp"
#include "qslab/random.hpp"
#include "qslab/s_spectrum.hpp"
#include "qslab/schatten.hpp"
#include "qslab/slice_fn.hpp"

namespace qslab {

namespace {

struct Acc {
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t samples = 0;
  std::vector<std::pair<std::string, double>> extra;

  void add(double v) {
    if (std::isnan(v) || v > worst) worst = v;
    ++samples;
  }
  void add(const Bound& b) { add(b.lhs - b.rhs); }
  void note(const std::string& name, double v) {
    for (auto& [k, x] : extra)
      if (k == name) {
        x = std::max(x, v);
        return;
      }
    extra.emplace_back(name, v);
  }
};

struct Check {
  std::string id;
  std::string anchor;
  std::string inputs;
  double bound;
  std::function<void(Rng&, Acc&)> body;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ",") + fmt(x);
  return s;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

ComplexStructure random_structure(Rng& rng, std::size_t n) {
  const QMatrix u = random_unitary(rng, n);
  return ComplexStructure(u.adjoint() * QMatrix::left_scalar(n, Quaternion::e1()) * u, random_unit_imaginary(rng));
}

QMatrix random_bj(Rng& rng, const ComplexStructure& s) {
  return lift_ji(random_cmatrix(rng, s.dim(), s.dim()) * (1.0 / std::sqrt(double(s.dim()))), s);
}

std::vector<Quaternion> random_coeffs(Rng& rng, std::size_t count) {
  std::vector<Quaternion> c(count);
  for (auto& q : c) q = random_quaternion(rng);
  return c;
}

Quaternion random_ball_point(Rng& rng, double radius) {
  return random_unit_quaternion(rng) * (radius * std::cbrt(rng.uniform()));
}

// ---------------------------------------------------------------- quat

void quat_checks(const SuiteConfig&, std::vector<Check>& out) {
  constexpr int kTriples = 100000;
  const auto unit_scale = [](Rng& rng) {
    return Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  };
  const std::string in = "triples=100000 components uniform in [-1,1]";
  out.push_back({"quat.associativity", "quaternion multiplication is associative", in, 1e-13,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < kTriples; ++k) {
                     const Quaternion x = unit_scale(rng), y = unit_scale(rng), z = unit_scale(rng);
                     a.add(dist((x * y) * z, x * (y * z)));
                   }
                 }});
  out.push_back({"quat.norm_multiplicative", "the modulus is multiplicative, |ab| = |a||b|", in, 1e-13,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < kTriples; ++k) {
                     const Quaternion x = unit_scale(rng), y = unit_scale(rng), z = unit_scale(rng);
                     a.add(std::abs(norm(x * y) - norm(x) * norm(y)));
                     a.add(std::abs(norm(x * y * z) - norm(x) * norm(y) * norm(z)));
                   }
                 }});
  out.push_back({"quat.conj_antihomomorphism", "conjugation reverses products, conj(ab) = conj(b) conj(a)", in,
                 1e-13, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < kTriples; ++k) {
                     const Quaternion x = unit_scale(rng), y = unit_scale(rng), z = unit_scale(rng);
                     a.add(dist(conj(x * y), conj(y) * conj(x)));
                     a.add(dist(conj(x * y * z), conj(z) * conj(y) * conj(x)));
                   }
                 }});
  out.push_back({"quat.inverse", "every nonzero quaternion is invertible, a a^-1 = a^-1 a = 1",
                 "samples=100000 |a| in [0.5,2]", 1e-13, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < kTriples; ++k) {
                     const Quaternion x = random_unit_quaternion(rng) * rng.uniform(0.5, 2.0);
                     a.add(dist(x * inv(x), 1.0));
                     a.add(dist(inv(x) * x, 1.0));
                   }
                 }});
  out.push_back({"quat.sphere_conjugation",
                 "x and y lie on the same sphere iff y = q^-1 x q for a unit q",
                 "pairs=10000", 1e-12, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 10000; ++k) {
                     const Quaternion x = unit_scale(rng), r = random_unit_quaternion(rng);
                     const Quaternion y = conj(r) * x * r;
                     const auto w = same_sphere(x, y);
                     a.add(w ? dist(inv(*w) * x * *w, y) : 1.0);
                   }
                 }});
}

// ---------------------------------------------------------------- qmatrix

void qmatrix_checks(const SuiteConfig& c, std::vector<Check>& out) {
  const std::size_t n = c.n;
  const std::string pairs = "pairs=200 n=1.." + std::to_string(n);
  out.push_back({"chi.product", "chi is multiplicative, chi(TS) = chi(T) chi(S)", pairs, 1e-12,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d), s = random_qmatrix(rng, d);
                     a.add((chi(t * s) - chi(t) * chi(s)).frobenius() / (t.frobenius() * s.frobenius()));
                     a.add((chi(t + s) - chi(t) - chi(s)).frobenius() / (t.frobenius() + s.frobenius()));
                   }
                 }});
  out.push_back({"chi.adjoint", "chi is a *-homomorphism, chi(T^*) = chi(T)^*", pairs, 1e-12,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d), s = random_qmatrix(rng, d);
                     a.add((chi(t.adjoint()) - chi(t).adjoint()).frobenius() / t.frobenius());
                     a.add((chi(s.adjoint()) - chi(s).adjoint()).frobenius() / s.frobenius());
                   }
                 }});
  out.push_back({"svd.polar", "polar decomposition T = W |T| with |T| = sqrt(T^* T)",
                 "samples=50 n=1.." + std::to_string(n), 1e-10, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 50; ++k) {
                     const QMatrix t = random_qmatrix(rng, 1 + std::size_t(k) % n);
                     const Polar p = polar(t);
                     const double s = opnorm(t);
                     a.add((p.w * p.p - t).frobenius() / s);
                     a.add((p.p * p.p - t.adjoint() * t).frobenius() / (s * s));
                   }
                 }});
  out.push_back({"svd.reconstruction", "singular value decomposition T = sum lambda_n <v_n, .> u_n",
                 "samples=50 n=1.." + std::to_string(n), 1e-10, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 50; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d);
                     const QSvd sv = qsvd(t);
                     a.add((svd_truncation(sv, d) - t).frobenius() / opnorm(t));
                   }
                 }});
  out.push_back({"svd.eckart_young", "||T - T_k|| = lambda_{k+1}, the distance to rank <= k operators",
                 "matrices=5 n=" + std::to_string(n) + " k=0..n-1", 1e-10, [=](Rng& rng, Acc& a) {
                   for (int m = 0; m < 5; ++m) {
                     const QMatrix t = random_qmatrix(rng, n);
                     const QSvd sv = qsvd(t);
                     for (std::size_t k = 0; k < n; ++k)
                       a.add(std::abs(opnorm(t - svd_truncation(sv, k)) - sv.sigmas[k]));
                   }
                 }});
  out.push_back({"svd.eckart_young_competitors", "inf over rank <= k operators F of ||T - F|| is lambda_{k+1}",
                 "matrices=3 competitors=100 per k n=" + std::to_string(std::min<std::size_t>(n, 8)), 1e-8,
                 [n = std::min<std::size_t>(n, 8)](Rng& rng, Acc& a) {
                   for (int m = 0; m < 3; ++m) {
                     const QMatrix t = random_qmatrix(rng, n);
                     const QSvd sv = qsvd(t);
                     for (std::size_t k = 0; k < n; ++k)
                       for (int r = 0; r < 100; ++r) a.add(sv.sigmas[k] - opnorm(t - random_rank_k(rng, n, k)));
                   }
                 }});
  out.push_back({"svd.sum_inequality", "lambda_{m+n+1}(T+S) <= lambda_{m+1}(T) + lambda_{n+1}(S)", pairs, 1e-10,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d), s = random_qmatrix(rng, d);
                     const auto st = qsvd(t).sigmas, ss = qsvd(s).sigmas, sum = qsvd(t + s).sigmas;
                     for (std::size_t i = 0; i < d; ++i)
                       for (std::size_t j = 0; i + j < d; ++j) a.add(sum[i + j] - st[i] - ss[j]);
                   }
                 }});
  out.push_back({"svd.product_inequality", "lambda_{m+n+1}(TS) <= lambda_{m+1}(T) lambda_{n+1}(S)", pairs, 1e-10,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d), s = random_qmatrix(rng, d);
                     const auto st = qsvd(t).sigmas, ss = qsvd(s).sigmas, prod = qsvd(t * s).sigmas;
                     for (std::size_t i = 0; i < d; ++i)
                       for (std::size_t j = 0; i + j < d; ++j) a.add(prod[i + j] - st[i] * ss[j]);
                   }
                 }});
}

// ---------------------------------------------------------------- spectrum

void spectrum_checks(const SuiteConfig& c, std::vector<Check>& out) {
  const std::size_t n = std::min<std::size_t>(c.n, 8);
  const std::string in = "matrices=100 n=1.." + std::to_string(n);
  out.push_back({"spectrum.pencil", "sphere representatives make Q_s(T) = T^2 - 2Re(s)T + |s|^2 I singular", in,
                 1e-8, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 100; ++k) {
                     const QMatrix t = random_qmatrix(rng, 1 + std::size_t(k) % n);
                     const double scale = 1.0 + std::pow(opnorm(t), 2);
                     for (const SphereRep& r : s_spectrum(t).representatives)
                       a.add(pencil_sigma_min(t, r.quaternion()) / scale);
                   }
                 }});
  out.push_back({"spectrum.axial_symmetry", "the S-spectrum is axially symmetric, compact and nonempty",
                 in + " points=16 per sphere", 1e-8, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 100; ++k) {
                     const QMatrix t = random_qmatrix(rng, 1 + std::size_t(k) % n);
                     const double scale = 1.0 + std::pow(opnorm(t), 2);
                     const auto reps = s_spectrum(t).representatives;
                     a.note("empty_spectra", reps.empty() ? 1.0 : 0.0);
                     if (reps.empty()) a.add(1.0);
                     for (const SphereRep& r : reps)
                       for (int m = 0; m < 16; ++m)
                         a.add(pencil_sigma_min(t, random_unit_imaginary(rng).embed(r.lambda)) / scale);
                   }
                 }});
  out.push_back({"spectrum.radius", "the S-spectrum lies in the closed ball of radius ||T||", in, 1e-8,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 100; ++k) {
                     const QMatrix t = random_qmatrix(rng, 1 + std::size_t(k) % n);
                     const double s = opnorm(t);
                     for (const SphereRep& r : s_spectrum(t).representatives) a.add(std::abs(r.lambda) - s);
                   }
                 }});
  out.push_back({"spectrum.sphere_example", "the S-spectrum of diag(e1, ..., e1) is the whole sphere S",
                 "n=3 points=16", 1e-12, [=](Rng& rng, Acc& a) {
                   const QMatrix t = QMatrix::left_scalar(3, Quaternion::e1());
                   const auto reps = s_spectrum(t).representatives;
                   a.add(std::abs(double(reps.size()) - 1.0));
                   if (!reps.empty()) {
                     a.add(std::abs(reps[0].lambda - Complex(0, 1)));
                     a.add(std::abs(reps[0].multiplicity - 3.0));
                   }
                   for (int m = 0; m < 16; ++m) a.add(pencil_sigma_min(t, random_unit_imaginary(rng)) / 2.0);
                 }});
  out.push_back({"spectrum.resolvent_equations",
                 "S_L(s,T) s - T S_L(s,T) = I and s S_R(s,T) - S_R(s,T) T = I off the S-spectrum",
                 "matrices=30 n=1.." + std::to_string(n), 1e-10, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 30; ++k) {
                     const std::size_t d = 1 + std::size_t(k) % n;
                     const QMatrix t = random_qmatrix(rng, d);
                     const Quaternion q = random_quaternion(rng) * 2.0;
                     const QMatrix ls = QMatrix::left_scalar(d, q), id = QMatrix::identity(d);
                     try {
                       const QMatrix sl = s_resolvent_left(t, q), sr = s_resolvent_right(t, q);
                       const double scale = std::max(1.0, opnorm(sl) * (norm(q) + opnorm(t)));
                       a.add((sl * ls - t * sl - id).frobenius() / scale);
                       a.add((ls * sr - sr * t - id).frobenius() / scale);
                     } catch (const SingularMatrix&) {
                       a.note("skipped_on_spectrum", 1.0);
                     }
                   }
                 }});
}

// ---------------------------------------------------------------- trace

void trace_checks(const SuiteConfig& c, std::vector<Check>& out) {
  const std::size_t n = std::max<std::size_t>(c.n, 2);
  const std::string in = "operators=10 n=2.." + std::to_string(n) + " bases=20";
  out.push_back({"trace.positive_invariance",
                 "for positive T the sum of <e_n, T e_n> does not depend on the orthonormal basis", in, 1e-10,
                 [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 10; ++k) {
                     const QMatrix t = random_positive(rng, 2 + std::size_t(k) % (n - 1));
                     const BasisSweep sw = trace_basis_sweep(t, rng, 20);
                     a.add(rel(sw.max_deviation, norm(sw.values[0])));
                   }
                 }});
  out.push_back({"trace.selfadjoint_invariance",
                 "for selfadjoint T in B_J the sum of <e_n, T e_n> does not depend on the orthonormal basis", in,
                 1e-10, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 10; ++k) {
                     const ComplexStructure s = random_structure(rng, 2 + std::size_t(k) % (n - 1));
                     const QMatrix x = random_bj(rng, s);
                     const QMatrix h = x + x.adjoint();
                     const BasisSweep sw = trace_basis_sweep(h, rng, 20);
                     a.add(rel(sw.max_deviation, norm(sw.values[0])));
                     a.add(rel(dist(sw.values[0], ji_trace(h, s).quaternion()), norm(sw.values[0])));
                   }
                 }});
  out.push_back({"trace.basis_dependence",
                 "outside the positive case the diagonal sum depends on the basis: diag(e1) gives e1 and -e1",
                 "T=diag(e1) bases={1},{e2}", 0.0, [](Rng&, Acc& a) {
                   const QMatrix t = QMatrix::diagonal(std::vector<Quaternion>{Quaternion::e1()});
                   a.add(dist(basis_trace(t, {QVector{Quaternion(1.0)}}), Quaternion::e1()));
                   a.add(dist(basis_trace(t, {QVector{Quaternion::e2()}}), -Quaternion::e1()));
                 }});
  out.push_back({"trace.unit_change", "changing the unit i to j maps the trace by phi, Tr_Jj(T) = phi(Tr_Ji(T))",
                 "operators=20 n=2.." + std::to_string(n), 1e-10, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 20; ++k) {
                     const std::size_t d = 2 + std::size_t(k) % (n - 1);
                     const QMatrix u = random_unitary(rng, d);
                     const QMatrix j = u.adjoint() * QMatrix::left_scalar(d, Quaternion::e1()) * u;
                     const ComplexStructure si(j, random_unit_imaginary(rng)), sj(j, random_unit_imaginary(rng));
                     const QMatrix t = random_bj(rng, si);
                     const UnitChange ch = trace_unit_change(t, si, sj);
                     a.add(rel(ch.error, norm(ch.trace_i)));
                   }
                 }});
}

// ---------------------------------------------------------------- schatten

void schatten_checks(const SuiteConfig& c, std::vector<Check>& out) {
  const std::size_t n = c.n;
  const std::string dim = " n=" + std::to_string(n);
  for (double p : c.ps) {
    const std::string tag = ".p=" + fmt(p);
    if (p >= 1.0) {
      const double q = conjugate_exponent(p);
      out.push_back({"schatten.hoelder" + tag, "Hoelder inequality |Tr(TS)| <= ||T||_p ||S||_q for 1/p + 1/q = 1",
                     "pairs=200 q=" + fmt(q) + dim, 1e-10, [=](Rng& rng, Acc& a) {
                       for (int k = 0; k < 200; ++k) {
                         const ComplexStructure s = random_structure(rng, n);
                         const QMatrix t = random_bj(rng, s), u = random_bj(rng, s);
                         const HoelderResult h = hoelder_check(t, u, p, q, s);
                         a.add(h.bound);
                         a.note("commutator", std::max(h.commutator_ts, h.commutator_st));
                       }
                     }});
    }
    if (p >= 1.0 && std::isfinite(p)) {
      out.push_back({"schatten.duality_optimizer" + tag,
                     "||T||_p = sup |Tr(ST)| over ||S||_q = 1, attained by S = |T|^(p-1) W^* / ||T||_p^(p-1)",
                     "operators=5" + dim, 1e-8, [=](Rng& rng, Acc& a) {
                       for (int k = 0; k < 5; ++k) {
                         const ComplexStructure s = random_structure(rng, n);
                         const DualResult d = dual_norm(random_bj(rng, s), p, s, rng, 10);
                         a.add(rel(std::abs(d.optimizer_value - d.norm_p), d.norm_p));
                         a.add(std::abs(schatten_norm(d.optimizer, conjugate_exponent(p)) - 1.0));
                       }
                     }});
      out.push_back({"schatten.duality_probes" + tag, "|Tr(ST)| <= ||T||_p for every S with ||S||_q = 1",
                     "operators=5 probes=1000" + dim, 1e-10, [=](Rng& rng, Acc& a) {
                       for (int k = 0; k < 5; ++k) {
                         const ComplexStructure s = random_structure(rng, n);
                         const DualResult d = dual_norm(random_bj(rng, s), p, s, rng, 1000);
                         a.add(rel(d.sup_estimate - d.norm_p, d.norm_p));
                       }
                     }});
    }
    if (std::isfinite(p)) {
      out.push_back({"schatten.characterization" + tag,
                     "norm chain ||T||_p^p = |||T|||_p^p = |||T|^p||_1 and the basis criteria for S_p(J)",
                     "operators=10 (T and T+T^*) sets=10" + dim, 1e-9, [=](Rng& rng, Acc& a) {
                       for (int k = 0; k < 5; ++k) {
                         const ComplexStructure s = random_structure(rng, n);
                         const QMatrix t = random_bj(rng, s);
                         for (const QMatrix& op : {t, QMatrix(t + t.adjoint())})
                           for (const Bound& b : characterization_suite(op, p, s, rng)) a.add(b);
                       }
                     }});
    }
  }
  out.push_back({"schatten.power_inequality",
                 "<x, T^p x> >= <x, T x>^p for p >= 1 and <= for 0 < p <= 1, positive T and unit x",
                 "samples=1000 p uniform in [0.1,4]" + dim, 1e-9, [=](Rng& rng, Acc& a) {
                   for (int k = 0; k < 1000; ++k) {
                     const QMatrix t = random_positive(rng, n);
                     QVector x = random_qvector(rng, n);
                     x = scale_right(x, Quaternion(1.0 / qnorm(x)));
                     a.add(power_inequality(t, x, rng.uniform(0.1, 4.0)));
                   }
                 }});
}

// ---------------------------------------------------------------- slice

void slice_checks(const SuiteConfig&, std::vector<Check>& out) {
  out.push_back({"slice.representation_formula",
                 "values off a slice follow from one slice: f(x) = 1/2(1 - i_x i) f(x_i) + 1/2(1 + i_x i) f(conj x_i)",
                 "polys=200 degree<=8 |x|<=1.5", 1e-12, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const auto c = random_coeffs(rng, 1 + rng.below(9));
                     const LeftSlicePoly f(c);
                     const RightSlicePoly g(c);
                     const Quaternion x = random_ball_point(rng, 1.5);
                     const SlicePoint sp = slice_decompose(x);
                     const UnitImaginary i = random_unit_imaginary(rng);
                     const Quaternion xi = i.embed({sp.x0, sp.x1}), xb = i.embed({sp.x0, -sp.x1});
                     const Quaternion fl = eval_left(f, x), fr = eval_right(g, x);
                     a.add(rel(dist(representation_formula(eval_left(f, xi), eval_left(f, xb), i, sp), fl), norm(fl)));
                     a.add(rel(dist(representation_formula_right(eval_right(g, xi), eval_right(g, xb), i, sp), fr),
                               norm(fr)));
                   }
                 }});
  out.push_back({"slice.splitting", "on C_i a left slice function splits as f_i = F + G j with F, G holomorphic",
                 "polys=200 degree<=8 |z|<=1.5", 1e-12, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 200; ++k) {
                     const LeftSlicePoly f(random_coeffs(rng, 1 + rng.below(9)));
                     const UnitImaginary i = random_unit_imaginary(rng), j = orthogonal_unit(i);
                     const ComplexSplit sp = split(f, i, j);
                     const LeftSlicePoly back = join_left(sp, i, j);
                     for (std::size_t m = 0; m < f.coeffs().size(); ++m)
                       a.add(rel(dist(back.coeffs()[m], f.coeffs()[m]), norm(f.coeffs()[m])));
                     const Complex z = random_disk_point(rng, 1.5);
                     const Quaternion v = eval_left(f, i.embed(z));
                     const Quaternion w = i.embed(eval_complex(sp.f1, z)) + i.embed(eval_complex(sp.f2, z)) * j;
                     a.add(rel(dist(v, w), norm(v)));
                   }
                 }});
  out.push_back({"slice.cauchy_riemann",
                 "slice polynomials have the form alpha + i_x beta with even/odd symmetry and Cauchy-Riemann",
                 "polys=50 degree<=5 h=1e-5", 1e-6, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 50; ++k) {
                     const auto c = random_coeffs(rng, 6);
                     const LeftSlicePoly f(c);
                     const RightSlicePoly g(c);
                     const UnitImaginary i = random_unit_imaginary(rng), kk = random_unit_imaginary(rng);
                     const double x0 = rng.uniform(-0.5, 0.5), x1 = rng.uniform(0.1, 0.6);
                     a.add(left_slice_diagnostics([&](const Quaternion& q) { return eval_left(f, q); }, x0, x1, i, kk)
                               .max());
                     a.add(right_slice_diagnostics([&](const Quaternion& q) { return eval_right(g, q); }, x0, x1, i,
                                                   kk)
                               .max());
                   }
                 }});
  out.push_back({"slice.derivative", "the slice derivative equals the real partial derivative",
                 "polys=100 degree<=8 h=1e-5 |x|<=1", 1e-7, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 100; ++k) {
                     const LeftSlicePoly f(random_coeffs(rng, 1 + rng.below(9)));
                     const LeftSlicePoly df = slice_derivative(f);
                     const Quaternion x = random_ball_point(rng, 1.0);
                     const Quaternion d = eval_left(df, x);
                     a.add(rel(dist(real_partial([&](const Quaternion& q) { return eval_left(f, q); }, x), d),
                               norm(d)));
                   }
                 }});
  out.push_back({"slice.intrinsic_product", "multiplication by an intrinsic function preserves slice regularity",
                 "pairs=100 degree<=6 |x|<=1", 1e-12, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 100; ++k) {
                     std::vector<Quaternion> rc(1 + rng.below(7));
                     for (auto& q : rc) q = rng.normal();
                     const LeftSlicePoly f(rc), g(random_coeffs(rng, 1 + rng.below(7)));
                     const LeftSlicePoly fg = intrinsic_product(f, g);
                     const Quaternion x = random_ball_point(rng, 1.0);
                     const Quaternion v = eval_left(f, x) * eval_left(g, x);
                     a.add(rel(dist(eval_left(fg, x), v), norm(v)));
                   }
                 }});
  out.push_back({"slice.extension", "the left slice extension of z -> b z is x -> x b",
                 "functions=50 grid 16 points", 1e-13, [](Rng& rng, Acc& a) {
                   for (int k = 0; k < 50; ++k) {
                     const Quaternion b = random_quaternion(rng);
                     const UnitImaginary i = random_unit_imaginary(rng);
                     std::vector<Complex> nodes;
                     for (int m = 0; m < 8; ++m) {
                       const Complex z = random_disk_point(rng, 1.0);
                       nodes.push_back(z);
                       nodes.push_back(std::conj(z));
                     }
                     const SliceSamples sm =
                         sample_plane([&](const Quaternion& q) { return q * b; }, i, nodes);
                     const SliceExtension e = ext_left(sm);
                     const Complex z = nodes[2 * rng.below(8)];
                     const Quaternion x = random_unit_imaginary(rng).embed(z);
                     a.add(rel(dist(e(x), x * b), norm(x * b)));
                   }
                 }});
}

// ---------------------------------------------------------------- bergman

BergOperator random_section(Rng& rng, const BergmanSpace& s, bool with_tail) {
  BergOperator t = BergOperator::section(random_cmatrix(rng, s.dim(), s.dim()) * (1.0 / std::sqrt(double(s.dim()))));
  if (with_tail) t.tail = random_complex(rng) * 0.5;
  return t;
}

// sum of c_k P_{z_k}, c_k in [0.5, 1.5], |z_k| <= 0.8
BergOperator kernel_combination(Rng& rng, const BergmanSpace& s, std::size_t rank) {
  BergOperator t = BergOperator::zero(s);
  for (std::size_t k = 0; k < rank; ++k) t += Complex(rng.uniform(0.5, 1.5)) * projection_pz(s, random_disk_point(rng, 0.8));
  return t;
}

void bergman_checks(const SuiteConfig& c, std::vector<Check>& out) {
  const std::size_t N = c.N;
  const QuadratureResolution quad = c.quad;
  const std::string qs = std::to_string(quad.radial) + "x" + std::to_string(quad.angular);
  for (double alpha : c.alphas) {
    const std::string tag = ".alpha=" + fmt(alpha);
    const std::string sp = "alpha=" + fmt(alpha) + " N=" + std::to_string(N);
    const auto space = [=] { return BergmanSpace(alpha, N, UnitImaginary::e1(), quad); };

    out.push_back({"bergman.basis" + tag, "sqrt(w_n) z^n is an orthonormal basis of the slice space",
                   sp + " quad=" + qs, 1e-10, [=](Rng&, Acc& a) { a.add(basis_gram_defect(space())); }});
    out.push_back({"bergman.kernel_origin" + tag, "K_alpha(q, 0) = 1",
                   "alpha=" + fmt(alpha) + " points=1000 |q|<1", 0.0, [=](Rng& rng, Acc& a) {
                     for (int k = 0; k < 1000; ++k)
                       a.add(dist(bergman_kernel(alpha, random_ball_point(rng, 0.99), 0.0), 1.0));
                   }});
    out.push_back({"bergman.kernel_in_plane" + tag, "on C_i the kernel is (1 - z conj(w))^-(2+alpha)",
                   "alpha=" + fmt(alpha) + " pairs=1000 |z|,|w|<=0.95", 1e-12, [=](Rng& rng, Acc& a) {
                     for (int k = 0; k < 1000; ++k) {
                       const UnitImaginary i = random_unit_imaginary(rng);
                       const Complex z = random_disk_point(rng, 0.95), w = random_disk_point(rng, 0.95);
                       const Complex closed = complex_bergman_kernel(alpha, z, w);
                       a.add(dist(bergman_kernel(alpha, i.embed(z), i.embed(w)), i.embed(closed)) / std::abs(closed));
                     }
                   }});
    out.push_back({"bergman.kernel_off_plane" + tag,
                   "off C_i the kernel is the representation-formula extension of the slice kernel",
                   "alpha=" + fmt(alpha) + " pairs=1000 |q|,|w|<=0.95", 1e-10, [=](Rng& rng, Acc& a) {
                     for (int k = 0; k < 1000; ++k) {
                       const UnitImaginary iw = random_unit_imaginary(rng);
                       const Complex wc = random_disk_point(rng, 0.95);
                       const Quaternion w = iw.embed(wc), q = random_ball_point(rng, 0.95);
                       const SlicePoint x = slice_decompose(q);
                       const Quaternion k1 = iw.embed(complex_bergman_kernel(alpha, {x.x0, x.x1}, wc));
                       const Quaternion k2 = iw.embed(complex_bergman_kernel(alpha, {x.x0, -x.x1}, wc));
                       const Quaternion expect = representation_formula(k1, k2, iw, x);
                       a.add(dist(bergman_kernel(alpha, q, w), expect) / std::max(1.0, norm(expect)));
                     }
                   }});
    out.push_back({"bergman.reproducing" + tag,
                   "<K_w, f> = f(w) for slice polynomials of degree <= N under the truncated kernel",
                   sp + " quad=" + qs + " polys=8 |w|<=0.9", 1e-11, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (int k = 0; k < 8; ++k) {
                       const auto cf = random_coeffs(rng, N + 1);
                       double scale = 0.0;
                       for (const auto& q : cf) scale += norm(q);
                       const LeftSlicePoly f(cf);
                       const Quaternion w = random_ball_point(rng, 0.9);
                       a.add(dist(reproduce(s, f, w), eval_left(f, w)) / std::max(1.0, scale));
                     }
                   }});
    out.push_back({"bergman.trace_integral" + tag,
                   "Tr(T) = (alpha+1) int T~ dmu_i for positive trace class T",
                   sp + " quad=" + qs + " ranks=1,2,3 |z_k|<=0.8", 1e-6, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (std::size_t rank = 1; rank <= 3; ++rank) {
                       const TraceIntegral ti = trace_integral(s, kernel_combination(rng, s, rank));
                       a.add(ti.relative_error);
                       a.note("richardson", ti.richardson);
                     }
                   }});
    std::vector<double> lp;
    for (double p : c.ps)
      if (p >= 1.0 && std::isfinite(p)) lp.push_back(p);
    if (!lp.empty())
      out.push_back({"bergman.berezin_lp" + tag, "int (T~)^p dmu_i <= Tr(T^p)/(alpha+1) for positive T and p >= 1",
                     sp + " quad=" + qs + " p=" + join(lp) + " operators=3", 1e-6, [=](Rng& rng, Acc& a) {
                       const BergmanSpace s = space();
                       for (std::size_t rank = 1; rank <= 3; ++rank) {
                         const BergOperator t = kernel_combination(rng, s, rank);
                         for (double p : lp) a.add(berezin_lp_check(s, t, p));
                       }
                     }});
    out.push_back({"bergman.projection_norms" + tag,
                   "||P_z - P_w|| = (1 - |<k_w,k_z>|^2)^(1/2) and ||P_z - P_w||_1 is twice that",
                   sp + " pairs=100 |z|,|w|<=0.8", 1e-9, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (int k = 0; k < 100; ++k)
                       for (const Bound& b :
                            projection_norm_check(s, random_disk_point(rng, 0.8), random_disk_point(rng, 0.8)))
                         a.add(b);
                   }});
    out.push_back({"bergman.berezin_as_trace" + tag, "T~(z) = Tr_Ji(T P_z) and Tr_Ji(P_z) = 1",
                   sp + " operators=20 |z|<=0.9", 1e-10, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (int k = 0; k < 20; ++k)
                       for (const Bound& b : cbaf_check(s, random_section(rng, s, true), random_disk_point(rng, 0.9)))
                         a.add(b);
                   }});
    out.push_back({"bergman.lipschitz" + tag,
                   "|T~(z) - T~(w)| <= 2 sqrt(2+alpha) ||T|| rho(z,w), and the same with beta(z,w)",
                   sp + " operators=50 pairs=20 each |z|,|w|<=0.95", 1e-9, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (int k = 0; k < 50; ++k) {
                       const BergOperator t = random_section(rng, s, true);
                       const double nt = operator_norm(s, t);
                       for (int m = 0; m < 20; ++m)
                         for (const Bound& b :
                              lipschitz_check(s, t, nt, random_disk_point(rng, 0.95), random_disk_point(rng, 0.95)))
                           a.add(b);
                     }
                   }});
    out.push_back({"bergman.berezin_properties" + tag,
                   "the Berezin transform is linear, real for selfadjoint T, nonnegative for positive T and "
                   "bounded by ||T||, with I~ = 1",
                   sp + " operators=20 points=10", 1e-12, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     const BergOperator id = BergOperator::identity(s);
                     for (int k = 0; k < 20; ++k) {
                       const BergOperator t = random_section(rng, s, true), u = random_section(rng, s, true);
                       const BergOperator h = t + t.adjoint(), p = kernel_combination(rng, s, 2);
                       const double nt = operator_norm(s, t);
                       const Complex c1 = random_complex(rng);
                       const BergOperator lin = c1 * t + u;
                       for (int m = 0; m < 10; ++m) {
                         const Complex z = random_disk_point(rng, 0.95);
                         const Complex vt = berezin(s, t, z).value;
                         a.add(std::abs(berezin(s, id, z).value - 1.0));
                         a.add(rel(std::abs(berezin(s, lin, z).value - (c1 * vt + berezin(s, u, z).value)), nt));
                         a.add(rel(std::abs(berezin(s, t.adjoint(), z).value - std::conj(vt)), nt));
                         a.add(rel(std::abs(berezin(s, h, z).value.imag()), nt));
                         a.add(-berezin(s, p, z).value.real());
                         a.add(rel(std::abs(vt) - nt, nt));
                       }
                     }
                   }});
    const std::size_t ni = std::min<std::size_t>(N, 8);
    const std::size_t samples = (ni + 1) * (ni + 1) + 20;
    const std::string si = "alpha=" + fmt(alpha) + " N=" + std::to_string(ni) + " spiral samples=" +
                           std::to_string(samples);
    out.push_back({"bergman.injectivity" + tag, "the Berezin transform is one-to-one", si + " operators=3", 1e-6,
                   [=](Rng& rng, Acc& a) {
                     const BergmanSpace s(alpha, ni, UnitImaginary::e1(), quad);
                     for (int k = 0; k < 3; ++k) {
                       const Injectivity r = berezin_injectivity(s, random_section(rng, s, k != 0), samples);
                       a.add(r.relative_error);
                       a.note("condition", r.condition);
                     }
                   }});
    out.push_back({"bergman.injectivity_zero" + tag, "T~ = 0 forces T = 0", si, 1e-6, [=](Rng&, Acc& a) {
                     const BergmanSpace s(alpha, ni, UnitImaginary::e1(), quad);
                     a.add(berezin_injectivity(s, BergOperator::zero(s), samples).relative_error);
                   }});
    out.push_back({"bergman.kernel_density" + tag,
                   "kernels at distinct points are independent and span the polynomials of degree <= N",
                   "alpha=" + fmt(alpha) + " N=" + std::to_string(ni) + " spiral points", 1e-8,
                   [=](Rng&, Acc& a) {
                     const BergmanSpace s(alpha, ni, UnitImaginary::e1(), quad);
                     auto pts = spiral_points(ni + 2);
                     pts.erase(pts.begin());  // z = 0
                     const Density d = density_check(s, pts);
                     a.add(d.orthogonal_residual + double(s.dim() - d.rank));
                     a.note("sigma_min", d.sigma_min);
                     a.note("rank", double(d.rank));
                   }});
    out.push_back({"bergman.slice_norms" + tag,
                   "the p-norms on two slices are equivalent with constant 2^max(p,1)",
                   sp + " quad=" + qs + " polys=5 p=" + join(c.ps), 1e-12, [=](Rng& rng, Acc& a) {
                     const BergmanSpace s = space();
                     for (int k = 0; k < 5; ++k) {
                       const LeftSlicePoly f(random_coeffs(rng, 1 + std::min<std::size_t>(N, 8)));
                       const UnitImaginary j = random_unit_imaginary(rng);
                       for (double p : c.ps)
                         if (std::isfinite(p))
                           for (const Bound& b : slice_norm_comparison(s, f, j, p).bounds) a.add(b);
                     }
                   }});
  }
}

const std::vector<std::string> kSuites{"quat", "qmatrix", "spectrum", "trace", "schatten", "slice", "bergman", "all"};

}  // namespace

const std::vector<std::string>& suite_names() { return kSuites; }

std::string fnv1a_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

void validate(const SuiteConfig& c) {
  if (std::find(kSuites.begin(), kSuites.end(), c.suite) == kSuites.end())
    throw ConfigError("unknown suite '" + c.suite + "'");
  if (c.n < 1 || c.n > kMaxSuiteDimension) throw ConfigError("n must be in [1, 32]");
  if (c.N < 1 || c.N > kMaxTruncation) throw ConfigError("N must be in [1, 64]");
  if (c.alphas.empty()) throw ConfigError("alpha list is empty");
  for (double a : c.alphas)
    if (!std::isfinite(a) || a <= -1.0) throw ConfigError("alpha must be finite and > -1");
  if (c.ps.empty()) throw ConfigError("p list is empty");
  for (double p : c.ps)
    if (!(p > 0.0)) throw ConfigError("p must be > 0 (inf allowed)");
  if (!std::isfinite(c.tol_scale) || c.tol_scale <= 0.0) throw ConfigError("tol must be finite and > 0");
  if (c.quad.radial < 1 || c.quad.angular < 1 || c.quad.radial > 4096 || c.quad.angular > 4096)
    throw ConfigError("quad counts must be in [1, 4096]");
}

bool SuiteReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

std::vector<const CheckRecord*> SuiteReport::failures() const {
  std::vector<const CheckRecord*> out;
  for (const auto& r : records)
    if (!r.pass) out.push_back(&r);
  return out;
}

SuiteReport run_suite(const SuiteConfig& c) {
  validate(c);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  std::vector<Check> checks;
  const auto want = [&](const char* name) { return c.suite == "all" || c.suite == name; };
  if (want("quat")) quat_checks(c, checks);
  if (want("qmatrix")) qmatrix_checks(c, checks);
  if (want("spectrum")) spectrum_checks(c, checks);
  if (want("trace")) trace_checks(c, checks);
  if (want("schatten")) schatten_checks(c, checks);
  if (want("slice")) slice_checks(c, checks);
  if (want("bergman")) bergman_checks(c, checks);
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });

  SuiteReport rep;
  rep.config = c;
  for (const Check& ch : checks) {
    CheckRecord r;
    r.id = ch.id;
    r.anchor = ch.anchor;
    r.inputs = ch.inputs;
    r.inputs_digest = fnv1a_hex(ch.inputs + "|seed=" + std::to_string(c.seed));
    r.bound = ch.bound * c.tol_scale;
    Rng rng((c.seed * 0x9e3779b97f4a7c15ULL) ^ fnv1a(ch.id));
    Acc acc;
    const auto t0 = Clock::now();
    try {
      ch.body(rng, acc);
      r.pass = acc.samples > 0 && acc.worst <= r.bound;
    } catch (const std::exception& e) {
      r.error = e.what();
      r.pass = false;
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r.samples = acc.samples;
    r.measured = acc.worst;
    r.extra = std::move(acc.extra);
    rep.records.push_back(std::move(r));
  }
  rep.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

}  // namespace qslab
