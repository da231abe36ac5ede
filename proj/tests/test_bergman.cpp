#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qslab/bergman.hpp"
#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"
#include "qslab/random.hpp"

using namespace qslab;

namespace {

const Complex I1{0.0, 1.0};

BergOperator random_operator(Rng& rng, const BergmanSpace& s, bool with_tail) {
  BergOperator t = BergOperator::section(random_cmatrix(rng, s.dim(), s.dim()));
  if (with_tail) t.tail = random_complex(rng);
  return t;
}

// sum c_k P_{z_k} with c_k > 0
BergOperator kernel_combination(Rng& rng, const BergmanSpace& s, int rank) {
  BergOperator t = BergOperator::zero(s);
  for (int k = 0; k < rank; ++k) t += Complex(rng.uniform(0.2, 2.0)) * projection_pz(s, random_disk_point(rng, 0.8));
  return t;
}

std::vector<Quaternion> random_coeffs(Rng& rng, std::size_t n) {
  std::vector<Quaternion> c;
  for (std::size_t k = 0; k < n; ++k) c.push_back(random_quaternion(rng));
  return c;
}

Quaternion random_ball_point(Rng& rng, double radius) {
  const Quaternion q = random_quaternion(rng);
  return q * (radius * rng.uniform() / norm(q));
}

}  // namespace

TEST_CASE("basis weights") {
  for (std::size_t n = 0; n < 10; ++n) {
    CHECK(basis_weight(0.0, n) == doctest::Approx(n + 1.0).epsilon(1e-14));
    CHECK(basis_weight(1.0, n) == doctest::Approx((n + 1.0) * (n + 2.0) / 2.0).epsilon(1e-14));
  }
  // the weights are the reciprocal radial moments
  for (double alpha : {0.0, 0.5, 2.0}) {
    const GaussRule g = gauss_jacobi_unit(40, alpha);
    for (std::size_t n = 0; n < 20; ++n) {
      double m = 0.0;
      for (std::size_t k = 0; k < g.nodes.size(); ++k) m += g.weights[k] * std::pow(g.nodes[k], n);
      CHECK((alpha + 1.0) * m * basis_weight(alpha, n) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("basis is orthonormal under the default quadrature") {
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    const BergmanSpace s(alpha, 24);
    CHECK(basis_gram_defect(s) < 1e-10);
  }
}

TEST_CASE("space parameters are validated") {
  CHECK_THROWS_AS(BergmanSpace(-1.0, 4), DomainError);
  CHECK_THROWS_AS(BergmanSpace(0.0, 65), DomainError);
  CHECK_THROWS_AS(BergmanSpace(0.0, 4, UnitImaginary::e1(), {0, 8}), DomainError);
}

TEST_CASE("kernel closed form") {
  Rng rng(31);
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    for (int t = 0; t < 50; ++t) {
      const Quaternion q = random_ball_point(rng, 0.95);
      CHECK(bergman_kernel(alpha, q, 0.0) == Quaternion(1.0));
    }
    for (int t = 0; t < 50; ++t) {
      const UnitImaginary i = random_unit_imaginary(rng);
      const Complex z = random_disk_point(rng, 0.9);
      const Complex w = random_disk_point(rng, 0.9);
      const Quaternion k = bergman_kernel(alpha, i.embed(z), i.embed(w));
      const Complex closed = std::pow(1.0 - z * std::conj(w), -(2.0 + alpha));
      CHECK(dist(k, i.embed(closed)) <= 1e-12 * std::max(1.0, std::abs(closed)));
      // hermitian symmetry on one plane
      CHECK(dist(k, conj(bergman_kernel(alpha, i.embed(w), i.embed(z)))) <= 1e-12 * std::max(1.0, std::abs(closed)));
    }
  }
}

TEST_CASE("kernel off the plane agrees with its power series and with the representation formula") {
  Rng rng(32);
  const BergmanSpace s64(1.0, 64);
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = random_ball_point(rng, 0.3);
    const Quaternion w = random_ball_point(rng, 0.3);
    const Quaternion k = bergman_kernel(1.0, q, w);
    CHECK(dist(k, truncated_kernel(s64, q, w)) < 1e-13);

    // values on another plane determine the kernel through the representation formula
    const UnitImaginary i = random_unit_imaginary(rng);
    const SlicePoint p = slice_decompose(q);
    const Quaternion a = bergman_kernel(1.0, i.embed({p.x0, p.x1}), w);
    const Quaternion b = bergman_kernel(1.0, i.embed({p.x0, -p.x1}), w);
    CHECK(dist(representation_formula(a, b, i, p), k) < 1e-10);
  }
}

TEST_CASE("kernel is left slice in q and right slice in conj(w)") {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const Quaternion w = random_ball_point(rng, 0.5);
    const Quaternion q = random_ball_point(rng, 0.5);
    const UnitImaginary i = random_unit_imaginary(rng);
    const UnitImaginary k = random_unit_imaginary(rng);
    const auto in_q = [&](const Quaternion& x) { return bergman_kernel(0.5, x, w); };
    const auto in_wbar = [&](const Quaternion& x) { return bergman_kernel(0.5, q, conj(x)); };
    CHECK(left_slice_diagnostics(in_q, 0.1, 0.3, i, k).max() < 1e-6);
    CHECK(right_slice_diagnostics(in_wbar, -0.1, 0.35, i, k).max() < 1e-6);
  }
}

TEST_CASE("kernel rejects boundary points") {
  CHECK_THROWS_AS(bergman_kernel(0.0, Quaternion(0, 1, 0, 0), 0.0), DomainError);
  CHECK_THROWS_AS(bergman_kernel(0.0, 0.0, Quaternion(0.6, 0, 0.8, 0)), DomainError);
  CHECK_THROWS_AS(complex_bergman_kernel(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("truncated reproducing property") {
  Rng rng(34);
  for (double alpha : {0.0, 1.5}) {
    const BergmanSpace s(alpha, 10, UnitImaginary(Vec3{1, 1, 0}), {12, 24});
    for (int t = 0; t < 5; ++t) {
      const LeftSlicePoly f(random_coeffs(rng, 11));
      const Quaternion w = random_ball_point(rng, 0.9);
      CHECK(dist(reproduce(s, f, w), eval_left(f, w)) < 1e-12);
    }
  }
}

TEST_CASE("truncation error decreases with N") {
  const std::vector<Complex> pts{0.8, {0.0, -0.8}, {0.5, 0.5}};
  double prev = 1e300;
  for (std::size_t n : {8, 16, 32, 64}) {
    const double e = kernel_truncation_error(BergmanSpace(1.0, n, UnitImaginary::e1(), {4, 4}), pts);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("normalized kernels") {
  Rng rng(35);
  const BergmanSpace s(0.0, 64, UnitImaginary::e1(), {4, 4});
  const CVector k0 = normalized_kernel_coeffs(s, 0.0);
  CHECK(k0[0] == Complex(1.0));
  for (std::size_t n = 1; n < k0.size(); ++n) CHECK(k0[n] == Complex(0.0));
  for (int t = 0; t < 50; ++t) {
    const Complex z = random_disk_point(rng, 0.8);
    const Complex w = random_disk_point(rng, 0.8);
    const CVector kz = normalized_kernel_coeffs(s, z);
    const CVector kw = normalized_kernel_coeffs(s, w);
    CHECK(vector_norm<Complex>(kz) == doctest::Approx(1.0).epsilon(1e-12));
    // <K_w, K_z> = K_z(w) = K(w, z)
    const Complex closed = complex_bergman_kernel(0.0, w, z) /
                           std::sqrt(complex_bergman_kernel(0.0, z, z).real() * complex_bergman_kernel(0.0, w, w).real());
    CHECK(std::abs(inner<Complex>(kw, kz) - closed) < 1e-8);
    // exact head plus tail is a unit vector
    const CVector h = exact_kernel_head(s, z);
    CHECK(std::pow(vector_norm<Complex>(h), 2) + kernel_tail_mass(s, z) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("Berezin transform of the basic operators") {
  Rng rng(36);
  for (double alpha : {0.0, 1.0}) {
    const BergmanSpace s(alpha, 12, UnitImaginary::e1(), {4, 4});
    const BergOperator p0 = projection_pz(s, 0.0);
    for (int t = 0; t < 20; ++t) {
      const Complex z = random_disk_point(rng, 0.99);
      CHECK(std::abs(berezin(s, BergOperator::identity(s), z).value - 1.0) < 1e-14);
      CHECK(std::abs(berezin(s, BergOperator::j_operator(s), z).value - I1) < 1e-14);
      CHECK(std::abs(berezin(s, BergOperator::zero(s), z).value) == 0.0);
      const double closed = std::pow(1.0 - std::norm(z), 2.0 + alpha);
      CHECK(std::abs(berezin(s, p0, z).value - closed) < 1e-15);
    }
  }
  const BergmanSpace s(0.0, 12, UnitImaginary::e1(), {4, 4});
  CHECK_THROWS_AS(berezin(s, BergOperator::identity(s), 1.0), DomainError);
}

TEST_CASE("Berezin transform properties") {
  Rng rng(37);
  const BergmanSpace s(0.5, 10, UnitImaginary(Vec3{0, 2, 1}), {4, 4});
  for (int t = 0; t < 30; ++t) {
    const BergOperator a = random_operator(rng, s, true);
    const BergOperator h = a + a.adjoint();
    const BergOperator pos = BergOperator::section(a.m.adjoint() * a.m);
    const double nrm = operator_norm(s, a);
    for (int k = 0; k < 5; ++k) {
      const Complex z = random_disk_point(rng, 0.95);
      const Complex va = berezin(s, a, z).value;
      CHECK(std::abs(berezin(s, h, z).value.imag()) < 1e-13);
      CHECK(berezin(s, pos, z).value.real() >= -1e-12);
      CHECK(std::abs(va) <= nrm + 1e-10);
      CHECK(std::abs(std::conj(va) - berezin(s, a.adjoint(), z).value) < 1e-13);
      // the lifted quaternionic operator gives the same transform
      CHECK(dist(berezin_quaternionic(s, a, z), s.unit().embed(va)) < 1e-12);
    }
  }
}

TEST_CASE("operator norm of a section with a tail") {
  Rng rng(38);
  const BergmanSpace s(0.0, 6, UnitImaginary::e1(), {4, 4});
  const BergOperator a = random_operator(rng, s, false);
  BergOperator b = a;
  b.tail = 10.0;
  CHECK(operator_norm(s, a) == doctest::Approx(linalg::opnorm(a.m)).epsilon(1e-12));
  CHECK(operator_norm(s, b) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("projections onto kernels") {
  Rng rng(39);
  const BergmanSpace s(1.0, 16, UnitImaginary::e1(), {4, 4});
  const BergOperator p0 = projection_pz(s, 0.0);
  CHECK(p0.m(0, 0) == Complex(1.0));
  CHECK(p0.m.frobenius() == 1.0);
  for (int t = 0; t < 20; ++t) {
    const BergOperator p = projection_pz(s, random_disk_point(rng, 0.9));
    CHECK(std::abs(p.m.trace() - 1.0) < 1e-12);
    CHECK((p.m * p.m - p.m).frobenius() < 1e-12);
    const std::vector<double> sv = linalg::singular_values(p.m);
    CHECK(sv[1] < 1e-12);
    CHECK(linalg::herm_eig(p.m).values.back() > -1e-12);
  }
}

TEST_CASE("Berezin transform as a trace against P_z") {
  Rng rng(40);
  for (double alpha : {0.0, 2.0}) {
    const BergmanSpace s(alpha, 12, UnitImaginary::e1(), {4, 4});
    for (int t = 0; t < 20; ++t) {
      const BergOperator a = random_operator(rng, s, t % 2 == 0);
      for (const Bound& b : cbaf_check(s, a, random_disk_point(rng, 0.9))) CHECK_MESSAGE(b.holds(), b.label);
    }
  }
}

TEST_CASE("projection norms") {
  const BergmanSpace s(0.0, 32, UnitImaginary::e1(), {4, 4});
  CHECK(kernel_overlap(0.0, 0.0, 0.5) == doctest::Approx(0.5625).epsilon(1e-15));
  const auto bounds = projection_norm_check(s, 0.0, 0.5);
  for (const Bound& b : bounds) CHECK_MESSAGE(b.holds(), b.label);
  // the exact-kernel norms against the hand values
  CHECK(bounds[0].lhs == doctest::Approx(0.0));
  const double c = std::sqrt(1.0 - 0.5625);
  CHECK(c == doctest::Approx(0.6614378277661477));
  for (const Bound& b : projection_norm_check(s, {0.2, 0.1}, {0.2, 0.1})) CHECK(b.holds());

  Rng rng(41);
  for (double alpha : {0.0, 1.0}) {
    const BergmanSpace t(alpha, 24, UnitImaginary::e1(), {4, 4});
    for (int k = 0; k < 10; ++k) {
      for (const Bound& b : projection_norm_check(t, random_disk_point(rng, 0.8), random_disk_point(rng, 0.8)))
        CHECK_MESSAGE(b.holds(), b.label);
    }
  }
}

TEST_CASE("trace-integral identity") {
  Rng rng(42);
  {
    const BergmanSpace s(0.0, 24);
    const TraceIntegral r = trace_integral(s, projection_pz(s, 0.0));
    CHECK(std::abs(r.integral - 1.0) < 1e-12);
  }
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    const BergmanSpace s(alpha, 24);
    const BergOperator t = kernel_combination(rng, s, 3);
    const TraceIntegral r = trace_integral(s, t);
    CHECK(r.relative_error <= 1e-6);
    CHECK(r.richardson <= 1e-6);
    const TraceIntegral scaled = trace_integral(s, Complex(3.0) * t);
    CHECK(std::abs(scaled.integral - 3.0 * r.integral) < 1e-12 * std::abs(r.integral));
  }
  // complex combinations of kernel projections
  const BergmanSpace s(1.0, 24);
  const BergOperator t = Complex(1.0, 2.0) * projection_pz(s, {0.3, 0.1}) - Complex(0.0, 0.5) * projection_pz(s, -0.6);
  CHECK(trace_integral(s, t).relative_error < 1e-9);
  CHECK_THROWS_AS(trace_integral(s, BergOperator::identity(s)), DomainError);
}

TEST_CASE("Berezin transform in L^p") {
  Rng rng(43);
  const BergmanSpace s(0.5, 16, UnitImaginary::e1(), {120, 64});
  const Bound p0 = berezin_lp_check(s, projection_pz(s, 0.0), 1.0);
  CHECK(p0.holds());
  CHECK(p0.lhs == doctest::Approx(p0.rhs).epsilon(1e-10));
  CHECK(berezin_lp_check(s, BergOperator::section(CMatrix::identity(s.dim())), 1.0).holds());
  for (double p : {1.5, 2.0, 3.0}) {
    const Bound b = berezin_lp_check(s, kernel_combination(rng, s, 3), p);
    CHECK_MESSAGE(b.holds(), b.lhs, " vs ", b.rhs);
    CHECK(b.lhs > 0.0);
  }
  CHECK_THROWS_AS(berezin_lp_check(s, Complex(-1.0) * projection_pz(s, 0.0), 1.0), DomainError);
}

TEST_CASE("hyperbolic metrics") {
  CHECK(pseudo_hyperbolic(0.5, -0.5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(bergman_metric(0.5, -0.5) == doctest::Approx(0.5 * std::log(9.0)).epsilon(1e-15));
  CHECK(pseudo_hyperbolic({0.3, 0.2}, {0.3, 0.2}) == 0.0);
  CHECK(bergman_metric({0.3, 0.2}, {0.3, 0.2}) == 0.0);
  CHECK(pseudo_hyperbolic(0.0, {0.3, -0.4}) == doctest::Approx(0.5).epsilon(1e-15));
  Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    const Complex z = random_disk_point(rng, 0.99), w = random_disk_point(rng, 0.99);
    const double r = pseudo_hyperbolic(z, w);
    CHECK(r < 1.0);
    CHECK(bergman_metric(z, w) >= r);
  }
}

TEST_CASE("Lipschitz bounds") {
  Rng rng(45);
  for (double alpha : {0.0, 1.0, 2.0}) {
    const BergmanSpace s(alpha, 12, UnitImaginary::e1(), {4, 4});
    for (int t = 0; t < 10; ++t) {
      const BergOperator a = random_operator(rng, s, true);
      const double nrm = operator_norm(s, a);
      for (int k = 0; k < 20; ++k) {
        const Complex z = random_disk_point(rng, 0.95);
        const Complex w = t % 2 ? random_disk_point(rng, 0.95) : z + 0.01 * random_complex(rng);
        if (std::abs(w) >= 1.0) continue;
        for (const Bound& b : lipschitz_check(s, a, nrm, z, w)) CHECK_MESSAGE(b.holds(), b.label);
      }
    }
    const BergOperator id = BergOperator::identity(s);
    CHECK(lipschitz_check(s, id, 1.0, 0.1, -0.7)[0].lhs < 1e-15);
  }
}

TEST_CASE("Berezin transform is injective") {
  Rng rng(46);
  const BergmanSpace s(0.0, 8, UnitImaginary::e1(), {4, 4});
  const std::size_t m = 81 + 20;
  const Injectivity r = berezin_injectivity(s, random_operator(rng, s, true), m);
  CHECK(r.relative_error <= 1e-6);
  MESSAGE("condition estimate ", r.condition);
  const Injectivity z = berezin_injectivity(s, BergOperator::zero(s), m);
  CHECK(z.relative_error == 0.0);
  const BergOperator p = projection_pz(s, 0.3);
  const Injectivity rp = berezin_injectivity(s, p, m);
  CHECK(rp.relative_error <= 1e-6);
  CHECK(linalg::singular_values(rp.recovered.m)[1] < 1e-6);
  CHECK_THROWS_AS(berezin_injectivity(s, p, 50), DomainError);

  const std::vector<Complex> pts = spiral_points(10);
  CHECK(pts[0] == Complex(0.0));
  for (std::size_t k = 1; k < pts.size(); ++k) CHECK(std::abs(pts[k]) == doctest::Approx(std::sqrt(k / 10.0)));
}

TEST_CASE("kernels span the truncated space") {
  {
    const BergmanSpace s(0.0, 0, UnitImaginary::e1(), {4, 4});
    const std::vector<Complex> pts{0.4};
    CHECK(density_check(s, pts).rank == 1);
  }
  const BergmanSpace s(1.0, 4, UnitImaginary::e1(), {4, 4});
  const std::vector<Complex> ray{0.1, 0.25, 0.4, 0.55, 0.7};
  const Density d = density_check(s, ray);
  CHECK(d.rank == 5);
  CHECK(d.sigma_min > 0.0);
  CHECK(d.orthogonal_residual <= 1e-8);
  const std::vector<Complex> repeated{0.1, 0.25, 0.4, 0.55, 0.4};
  const Density r = density_check(s, repeated);
  CHECK(r.rank == 4);
  CHECK(r.orthogonal_residual > 1e-3);
}

TEST_CASE("slice norms on two planes are equivalent") {
  Rng rng(47);
  const BergmanSpace s(0.5, 8, UnitImaginary::e1(), {40, 48});
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    const LeftSlicePoly f(random_coeffs(rng, 6));
    const SliceNormComparison c = slice_norm_comparison(s, f, UnitImaginary(Vec3{0.2, 1.0, -0.4}), p);
    for (const Bound& b : c.bounds) CHECK_MESSAGE(b.holds(), b.label);
    if (p == 2.0) {
      // angular integration removes the cross terms, so the 2-norm is the same on every plane
      CHECK(c.norm_i_p == doctest::Approx(c.norm_j_p).epsilon(1e-12));
    } else {
      CHECK(std::abs(c.norm_i_p - c.norm_j_p) > 1e-6);
    }
  }
  // an intrinsic function has the same norm on every plane
  const SliceNormComparison c = slice_norm_comparison(s, LeftSlicePoly({1.0, -2.0, 0.5}), UnitImaginary::e3(), 2.0);
  CHECK(c.norm_i_p == doctest::Approx(c.norm_j_p).epsilon(1e-12));
}
