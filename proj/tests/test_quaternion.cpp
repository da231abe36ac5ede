#include <cmath>

#include "doctest.h"
#include "qslab/errors.hpp"
#include "qslab/quaternion.hpp"
#include "qslab/random.hpp"

using namespace qslab;

namespace {

const Quaternion e1 = Quaternion::e1();
const Quaternion e2 = Quaternion::e2();
const Quaternion e3 = Quaternion::e3();

}  // namespace

TEST_CASE("multiplication table") {
  CHECK(e1 * e2 == e3);
  CHECK(e2 * e3 == e1);
  CHECK(e3 * e1 == e2);
  CHECK(e2 * e1 == -e3);
  CHECK(e1 * e1 == Quaternion(-1.0));
  CHECK(e2 * e2 == Quaternion(-1.0));
  CHECK(e3 * e3 == Quaternion(-1.0));
  const Quaternion q{0.5, -1.25, 2.0, 3.5};
  CHECK(q * Quaternion(1.0) == q);
  CHECK(Quaternion(1.0) * q == q);
}

TEST_CASE("conjugate, inverse, norm") {
  CHECK(conj(e1) == -e1);
  CHECK(inv(Quaternion(2.0)) == Quaternion(0.5));
  CHECK(conj(e1 * e2) == conj(e2) * conj(e1));
  CHECK(norm(Quaternion(1, 2, 2, 4)) == doctest::Approx(5.0));
  CHECK_THROWS_AS(inv(Quaternion()), DomainError);

  const Quaternion q{1, -2, 3, 0.5};
  CHECK(dist(q * inv(q), Quaternion(1.0)) < 1e-15);
  CHECK(re(q) == 1.0);
  CHECK(im(q) == Vec3{-2, 3, 0.5});
}

TEST_CASE("algebra invariants on random inputs") {
  Rng rng(11);
  double assoc = 0, mult = 0, anti = 0, cq = 0;
  for (int k = 0; k < 20000; ++k) {
    const Quaternion a = random_unit_quaternion(rng) * rng.uniform();
    const Quaternion b = random_unit_quaternion(rng) * rng.uniform();
    const Quaternion c = random_unit_quaternion(rng) * rng.uniform();
    assoc = std::max(assoc, dist((a * b) * c, a * (b * c)));
    mult = std::max(mult, std::abs(norm(a * b) - norm(a) * norm(b)));
    anti = std::max(anti, dist(conj(a * b), conj(b) * conj(a)));
    cq = std::max(cq, dist(conj(a) * a, Quaternion(norm2(a))));
  }
  CHECK(assoc <= 1e-13);
  CHECK(mult <= 1e-13);
  CHECK(anti <= 1e-13);
  CHECK(cq <= 1e-13);
}

TEST_CASE("slice decomposition") {
  SlicePoint s = slice_decompose({1, 2, 0, 0});
  CHECK(s.x0 == 1.0);
  CHECK(s.x1 == 2.0);
  CHECK(s.unit.direction() == Vec3{1, 0, 0});

  s = slice_decompose(Quaternion(-3.0));
  CHECK(s.x0 == -3.0);
  CHECK(s.x1 == 0.0);
  CHECK(s.unit.direction() == Vec3{1, 0, 0});

  s = slice_decompose(e2 - e3);
  CHECK(s.x0 == 0.0);
  CHECK(s.x1 == doctest::Approx(std::sqrt(2.0)));
  CHECK(s.unit.direction()[1] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(s.unit.direction()[2] == doctest::Approx(-1 / std::sqrt(2.0)));

  const Quaternion q{0.3, -0.2, 0.9, 0.1};
  CHECK(dist(slice_decompose(q).quaternion(), q) < 1e-15);
}

TEST_CASE("unit imaginary squares to -1 and embeds its slice") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const UnitImaginary i = random_unit_imaginary(rng);
    CHECK(dist(i.quaternion() * i.quaternion(), Quaternion(-1.0)) < 1e-15);
    const Complex z{rng.normal(), rng.normal()};
    const Complex w{rng.normal(), rng.normal()};
    // C_i is a field isomorphic to C
    CHECK(dist(i.embed(z) * i.embed(w), i.embed(z * w)) < 1e-14);
    CHECK(std::abs(i.project(i.embed(z)) - z) < 1e-15);
  }
  CHECK_THROWS_AS(UnitImaginary(Vec3{0, 0, 0}), DomainError);
}

TEST_CASE("same_sphere with witness") {
  auto w = same_sphere(e1, e2);
  REQUIRE(w.has_value());
  CHECK(std::abs(norm(*w) - 1.0) < 1e-15);
  CHECK(dist(inv(*w) * e1 * *w, e2) < 1e-14);

  CHECK_FALSE(same_sphere({1, 1, 0, 0}, {2, 1, 0, 0}).has_value());

  const Quaternion x{0.2, 0.3, -0.4, 0.5};
  w = same_sphere(x, x);
  REQUIRE(w.has_value());
  CHECK(dist(*w, Quaternion(1.0)) < 1e-15);

  // antipodal axes
  w = same_sphere({0.5, 0, 0, 1}, {0.5, 0, 0, -1});
  REQUIRE(w.has_value());
  CHECK(dist(inv(*w) * Quaternion(0.5, 0, 0, 1) * *w, Quaternion(0.5, 0, 0, -1)) < 1e-14);

  // real points: only equal reals share a sphere
  CHECK(same_sphere(Quaternion(2.0), Quaternion(2.0)).has_value());
  CHECK_FALSE(same_sphere(Quaternion(2.0), Quaternion(2.0, 1e-3, 0, 0)).has_value());
}

TEST_CASE("same_sphere is an equivalence relation on sphere samples") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const double x0 = rng.normal(), x1 = std::abs(rng.normal());
    const Quaternion a = random_unit_imaginary(rng).embed({x0, x1});
    const Quaternion b = random_unit_imaginary(rng).embed({x0, x1});
    const Quaternion c = random_unit_imaginary(rng).embed({x0, x1});
    const Quaternion off = random_unit_imaginary(rng).embed({x0 + 1e-6, x1});
    CHECK(same_sphere(a, a).has_value());
    const auto ab = same_sphere(a, b);
    const auto ba = same_sphere(b, a);
    REQUIRE(ab.has_value());
    REQUIRE(ba.has_value());
    CHECK(dist(inv(*ab) * a * *ab, b) < 1e-12);
    CHECK(dist(inv(*ba) * b * *ba, a) < 1e-12);
    const auto bc = same_sphere(b, c);
    REQUIRE(bc.has_value());
    REQUIRE(same_sphere(a, c).has_value());
    // composing witnesses gives a witness for a ~ c
    const Quaternion q = *ab * *bc;
    CHECK(dist(inv(q) * a * q, c) < 1e-12);
    CHECK_FALSE(same_sphere(a, off).has_value());
  }
}
