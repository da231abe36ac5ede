#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qslab/complex_linalg.hpp"
#include "qslab/errors.hpp"
#include "qslab/qmatrix.hpp"
#include "qslab/random.hpp"

using namespace qslab;

namespace {

const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();

double qdist(const QMatrix& a, const QMatrix& b) { return (a - b).frobenius(); }

double vdist(const QVector& a, const QVector& b) { return qnorm(sub(a, b)); }

// Direct quaternion-entry product, independent of the block formulas.
HMatrix entry_product(const HMatrix& a, const HMatrix& b) { return a * b; }

}  // namespace

TEST_CASE("chi small cases") {
  CHECK(chi(QMatrix::identity(1)) == CMatrix::identity(2));
  // T = j: A = 0, B = 1
  const QMatrix j(CMatrix{{0.0}}, CMatrix{{1.0}});
  CHECK(chi(j) == CMatrix{{0.0, -1.0}, {1.0, 0.0}});
  CHECK(j.entry(0, 0) == e2);
}

TEST_CASE("block product agrees with entrywise quaternion product") {
  Rng rng(31);
  for (std::size_t n : {1u, 2u, 5u}) {
    const QMatrix t = random_qmatrix(rng, n), s = random_qmatrix(rng, n);
    const HMatrix direct = entry_product(t.entries(), s.entries());
    CHECK(qdist(t * s, QMatrix::from_entries(direct)) < 1e-13);
    // apply vs entrywise matrix-vector
    const QVector x = random_qvector(rng, n);
    CHECK(vdist(t.apply(x), t.entries().apply(x)) < 1e-13);
    // adjoint is conjugate transpose of entries
    CHECK(qdist(t.adjoint(), QMatrix::from_entries(t.entries().adjoint())) < 1e-15);
  }
}

TEST_CASE("chi is a unital *-homomorphism") {
  Rng rng(32);
  double prod = 0, sum = 0, adj = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.below(16);
    const QMatrix t = random_qmatrix(rng, n), s = random_qmatrix(rng, n);
    const double scale = std::max(1.0, t.frobenius() * s.frobenius());
    prod = std::max(prod, (chi(t * s) - chi(t) * chi(s)).frobenius() / scale);
    sum = std::max(sum, (chi(t + s) - chi(t) - chi(s)).frobenius());
    adj = std::max(adj, (chi(t.adjoint()) - chi(t).adjoint()).frobenius());
    CHECK(qdist(from_chi(chi(t)), t) == 0.0);
  }
  CHECK(prod <= 1e-12);
  CHECK(sum <= 1e-12);
  CHECK(adj <= 1e-13);
}

TEST_CASE("embedding intertwines apply and inner product") {
  Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng.below(8);
    const QMatrix t = random_qmatrix(rng, n);
    const QVector x = random_qvector(rng, n), y = random_qvector(rng, n);
    const CVector lhs = embed(t.apply(x));
    const CVector rhs = chi(t).apply(embed(x));
    double d = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) d += std::norm(lhs[i] - rhs[i]);
    CHECK(std::sqrt(d) < 1e-13);

    // C_{e1} part of <x,y> is the complex inner product of the embeddings
    const Quaternion q = qinner(x, y);
    const Complex c = inner<Complex>(embed(x), embed(y));
    CHECK(std::abs(q.w - c.real()) < 1e-13);
    CHECK(std::abs(q.x - c.imag()) < 1e-13);
    CHECK(vdist(unembed(embed(x)), x) == 0.0);
  }
}

TEST_CASE("right linearity and inner product axioms") {
  Rng rng(34);
  for (int k = 0; k < 50; ++k) {
    const QMatrix t = random_qmatrix(rng, 4);
    const QVector x = random_qvector(rng, 4), y = random_qvector(rng, 4), z = random_qvector(rng, 4);
    const Quaternion a = random_quaternion(rng);
    CHECK(vdist(t.apply(scale_right(x, a)), scale_right(t.apply(x), a)) < 1e-13);
    const Quaternion lhs = qinner(x, add(scale_right(y, a), z));
    CHECK(dist(lhs, qinner(x, y) * a + qinner(x, z)) < 1e-12);
    CHECK(dist(qinner(x, y), conj(qinner(y, x))) < 1e-13);
    // adjoint defining identity
    CHECK(dist(qinner(t.adjoint().apply(x), y), qinner(x, t.apply(y))) < 1e-12);
  }
}

TEST_CASE("opnorm and predicates") {
  CHECK(opnorm(QMatrix::diagonal(std::vector<Quaternion>{2.0 * e1})) == doctest::Approx(2.0));
  const QMatrix d = QMatrix::diagonal(std::vector<Quaternion>{{1, 2, 3, 4}, e2});
  CHECK(is_normal(d));
  CHECK(QMatrix::from_entries(HMatrix{{e1}}).adjoint().entry(0, 0) == -e1);
  CHECK(qdist(QMatrix::identity(3).adjoint(), QMatrix::identity(3)) == 0.0);

  Rng rng(35);
  for (int k = 0; k < 20; ++k) {
    const QMatrix t = random_qmatrix(rng, 6);
    CHECK(qdist(t.adjoint().adjoint(), t) == 0.0);
    CHECK(is_positive(t.adjoint() * t));
    CHECK(is_selfadjoint(t + t.adjoint()));
    CHECK(is_antiselfadjoint(t - t.adjoint()));
    CHECK(is_unitary(random_unitary(rng, 6)));
    CHECK_FALSE(is_positive(t + t.adjoint() - QMatrix::identity(6) * 10.0));
    CHECK(std::abs(opnorm(t) - linalg::opnorm(chi(t))) == 0.0);
  }
  CHECK_FALSE(is_normal(QMatrix::from_entries(HMatrix{{0.0, 1.0}, {0.0, 0.0}})));
}

TEST_CASE("selfadjoint eigen decomposition") {
  Rng rng(36);
  for (std::size_t n : {1u, 3u, 8u, 16u}) {
    const QMatrix h = random_selfadjoint(rng, n);
    const QEigen e = selfadjoint_eigen(h);
    REQUIRE(e.values.size() == n);
    CHECK(qdist(spectral_synthesis(e.values, e.vectors), h) <= 1e-10 * std::max(1.0, opnorm(h)));
    for (std::size_t a = 0; a < n; ++a) {
      // T x = x lambda with a real eigenvalue
      CHECK(vdist(h.apply(e.vectors[a]), scale_right(e.vectors[a], Quaternion(e.values[a]))) < 1e-9);
      for (std::size_t b = 0; b < n; ++b)
        CHECK(dist(qinner(e.vectors[a], e.vectors[b]), Quaternion(a == b ? 1.0 : 0.0)) < 1e-10);
    }
    // chi doubles every eigenvalue
    const auto ce = linalg::herm_eig(chi(h));
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(std::abs(ce.values[2 * a] - e.values[a]) < 1e-10);
      CHECK(std::abs(ce.values[2 * a + 1] - e.values[a]) < 1e-10);
    }
  }
}

TEST_CASE("square root, abs, fractional powers") {
  CHECK(qdist(sqrt_pos(QMatrix::identity(3)), QMatrix::identity(3)) < 1e-14);
  CHECK(qdist(abs(QMatrix::diagonal(std::vector<Quaternion>{-3.0})),
              QMatrix::diagonal(std::vector<Quaternion>{3.0})) < 1e-14);
  CHECK(qdist(frac_power(QMatrix::identity(2), 7.3), QMatrix::identity(2)) < 1e-14);
  CHECK(qdist(frac_power(QMatrix::diagonal(std::vector<Quaternion>{4.0}), 0.5),
              QMatrix::diagonal(std::vector<Quaternion>{2.0})) < 1e-14);
  CHECK_THROWS_AS(frac_power(QMatrix::identity(2), 0.0), DomainError);
  CHECK_THROWS_AS(sqrt_pos(QMatrix::identity(2) * -1.0), DomainError);

  Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    const QMatrix p = random_positive(rng, 5);
    const double s = opnorm(p);
    const QMatrix r = sqrt_pos(p);
    CHECK(qdist(r * r, p) <= 1e-10 * s);
    CHECK(qdist(frac_power(p, 1.0), p) <= 1e-10 * s);
    CHECK(qdist(frac_power(p, 2.0), p * p) <= 1e-10 * s * s);
    CHECK(qdist(frac_power(frac_power(p, 0.37), 1.0 / 0.37), p) <= 1e-9 * std::max(1.0, s));
    CHECK(qdist(abs(random_unitary(rng, 5)), QMatrix::identity(5)) < 1e-10);
    CHECK(is_positive(abs(random_qmatrix(rng, 5))));
  }
}

TEST_CASE("polar decomposition") {
  Polar pd = polar(QMatrix::identity(2));
  CHECK(qdist(pd.w, QMatrix::identity(2)) < 1e-14);
  CHECK(qdist(pd.p, QMatrix::identity(2)) < 1e-14);
  pd = polar(QMatrix::diagonal(std::vector<Quaternion>{-2.0}));
  CHECK(dist(pd.w.entry(0, 0), Quaternion(-1.0)) < 1e-14);
  CHECK(dist(pd.p.entry(0, 0), Quaternion(2.0)) < 1e-14);

  Rng rng(38);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.below(6);
    const QMatrix t = random_qmatrix(rng, n);
    pd = polar(t);
    CHECK(qdist(pd.w * pd.p, t) <= 1e-10 * std::max(1.0, opnorm(t)));
    CHECK(is_positive(pd.p));
    CHECK(is_unitary(pd.w, 1e-9));  // invertible T gives unitary W
  }

  // singular T: W vanishes on ker(P) and is isometric on its complement
  for (int k = 0; k < 20; ++k) {
    const QMatrix t = random_rank_k(rng, 5, 2);
    pd = polar(t);
    CHECK(qdist(pd.w * pd.p, t) <= 1e-10 * std::max(1.0, opnorm(t)));
    const QEigen e = selfadjoint_eigen(pd.p);
    for (std::size_t a = 0; a < 5; ++a) {
      const double wn = qnorm(pd.w.apply(e.vectors[a]));
      if (a < 2)
        CHECK(std::abs(wn - 1.0) < 1e-9);
      else
        CHECK(wn < 1e-9);
    }
  }

  // selfadjoint and anti-selfadjoint T pass the property on to W
  const QMatrix h = random_selfadjoint(rng, 4);
  CHECK(is_selfadjoint(polar(h).w, 1e-9));
  const QMatrix x = random_qmatrix(rng, 4);
  CHECK(is_antiselfadjoint(polar(x - x.adjoint()).w, 1e-9));
}

TEST_CASE("quaternionic SVD") {
  QSvd d = qsvd(QMatrix(3));
  for (double s : d.sigmas) CHECK(s == 0.0);
  d = qsvd(QMatrix::diagonal(std::vector<Quaternion>{{3, 0, 4, 0}}));
  CHECK(std::abs(d.sigmas[0] - 5.0) < 1e-14);

  Rng rng(39);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + rng.below(8);
    const QMatrix t = random_qmatrix(rng, n);
    d = qsvd(t);
    const double s = opnorm(t);
    // T x = sum left_n sigma_n <right_n, x>
    const QVector x = random_qvector(rng, n);
    QVector y(n);
    for (std::size_t m = 0; m < n; ++m)
      y = add(y, scale_right(d.left_basis[m], qinner(d.right_basis[m], x) * d.sigmas[m]));
    CHECK(vdist(y, t.apply(x)) <= 1e-10 * s * qnorm(x));
    CHECK(qdist(svd_truncation(d, n), t) <= 1e-10 * s);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Quaternion id(a == b ? 1.0 : 0.0);
        CHECK(dist(qinner(d.left_basis[a], d.left_basis[b]), id) < 1e-10);
        CHECK(dist(qinner(d.right_basis[a], d.right_basis[b]), id) < 1e-10);
      }
    // agreement with the deduplicated chi singular values and eigenvalues of |T|
    const auto cs = chi_singular_values(t);
    const QEigen ae = selfadjoint_eigen(abs(t));
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(std::abs(cs[a] - d.sigmas[a]) < 1e-10 * std::max(1.0, s));
      CHECK(std::abs(ae.values[a] - d.sigmas[a]) < 1e-10 * std::max(1.0, s));
    }
  }
}

TEST_CASE("Eckart-Young: truncation is optimal among rank-k operators") {
  Rng rng(40);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 6;
    const QMatrix t = random_qmatrix(rng, n);
    const QSvd d = qsvd(t);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(opnorm(t - svd_truncation(d, k)) - d.sigmas[k]) <= 1e-10);
      for (int c = 0; c < 10; ++c) CHECK(opnorm(t - random_rank_k(rng, n, k)) >= d.sigmas[k] - 1e-8);
    }
  }
}

TEST_CASE("min-max characterization of eigenvalues of positive T") {
  // lambda_{k+1} = max of ||T x|| over unit x orthogonal to the top k eigenvectors
  Rng rng(41);
  const std::size_t n = 4;
  const QMatrix t = random_positive(rng, n);
  const QEigen e = selfadjoint_eigen(t);
  for (std::size_t k = 0; k < n; ++k) {
    double best = 0;
    for (int s = 0; s < 20000; ++s) {
      QVector x = random_qvector(rng, n);
      for (std::size_t m = 0; m < k; ++m) x = sub(x, scale_right(e.vectors[m], qinner(e.vectors[m], x)));
      const double nx = qnorm(x);
      best = std::max(best, qnorm(t.apply(x)) / nx);
    }
    // random search approaches the max from below; refine with power iteration on the complement
    QVector x = random_qvector(rng, n);
    for (int it = 0; it < 2000; ++it) {
      for (std::size_t m = 0; m < k; ++m) x = sub(x, scale_right(e.vectors[m], qinner(e.vectors[m], x)));
      x = t.apply(x);
      x = scale_right(x, Quaternion(1.0 / qnorm(x)));
    }
    for (std::size_t m = 0; m < k; ++m) x = sub(x, scale_right(e.vectors[m], qinner(e.vectors[m], x)));
    best = std::max(best, qnorm(t.apply(x)) / qnorm(x));
    CHECK(best <= e.values[k] + 1e-12);
    CHECK(std::abs(best - e.values[k]) <= 1e-6);
  }
}

TEST_CASE("singular value inequalities for sums and products") {
  Rng rng(42);
  const std::size_t n = 5;
  for (int trial = 0; trial < 40; ++trial) {
    const QMatrix a = random_qmatrix(rng, n), b = random_qmatrix(rng, n);
    const auto sa = qsvd(a).sigmas, sb = qsvd(b).sigmas;
    const auto ssum = qsvd(a + b).sigmas, sprod = qsvd(a * b).sigmas;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) {
        CHECK(ssum[i + j] <= sa[i] + sb[j] + 1e-10);
        CHECK(sprod[i + j] <= sa[i] * sb[j] + 1e-10);
      }
  }
}
