#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "cuntz/quadfield.hpp"

using cuntz::exact::QuadComplex;
using cuntz::exact::QuadRational;
using cuntz::exact::Rational;

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("quadratic field normalization") {
  CHECK(QuadRational::sqrt_of(8) == QuadRational(Rational(0), Rational(2), 2));
  CHECK(QuadRational::sqrt_of(9) == QuadRational(3));
  CHECK(QuadRational::sqrt_of(1) == QuadRational(1));
  CHECK(QuadRational::sqrt_of(0) == QuadRational(0));
  // sqrt2 * sqrt2 = 2, (1/sqrt2)^2 = 1/2
  QuadRational s2 = QuadRational::sqrt_of(2);
  CHECK(s2 * s2 == QuadRational(2));
  QuadRational h(Rational(0), Rational(1, 2), 2);
  CHECK(h * h == QuadRational(Rational(1, 2)));
  CHECK(QuadRational(1) / s2 == h);
}

TEST_CASE("quadratic field exact ordering") {
  QuadRational s2 = QuadRational::sqrt_of(2);
  CHECK(s2 > QuadRational(Rational(141421356, 100000000)));
  CHECK(s2 < QuadRational(Rational(141421357, 100000000)));
  CHECK((s2 - s2).sign() == 0);
  // 3 - 2*sqrt2 > 0, 2 - 2*sqrt2 < 0
  CHECK((QuadRational(3) - QuadRational(2) * s2).sign() == 1);
  CHECK((QuadRational(2) - QuadRational(2) * s2).sign() == -1);
}

TEST_CASE("distinct radicands never compare equal") {
  CHECK(QuadRational::sqrt_of(2) != QuadRational::sqrt_of(3));
  CHECK_THROWS_AS(QuadRational::sqrt_of(2) + QuadRational::sqrt_of(3),
                  std::invalid_argument);
  // Rationals are radicand-agnostic.
  CHECK(QuadRational::sqrt_of(2) + QuadRational(1) ==
        QuadRational(Rational(1), Rational(1), 2));
}

TEST_CASE("complex field and unimodularity") {
  QuadComplex i = QuadComplex::i();
  CHECK(i * i == QuadComplex(-1));
  CHECK(conj(i) == -i);
  QuadComplex u(QuadRational(Rational(3, 5)), QuadRational(Rational(4, 5)));
  CHECK(u.is_unimodular());
  CHECK((u * conj(u)) == QuadComplex(1));
  CHECK((QuadComplex(1) / u) == conj(u));
  QuadComplex h = QuadComplex::inv_sqrt_of(2);
  CHECK((h * h) == QuadComplex(Rational(1, 2)));
  CHECK_FALSE(h.is_unimodular());
}

TEST_CASE("eigen matrices over the exact scalar") {
  using M = Eigen::Matrix<QuadComplex, Eigen::Dynamic, Eigen::Dynamic>;
  QuadComplex h = QuadComplex::inv_sqrt_of(2);
  M a(2, 2);
  a << h, h, h, -h;
  M p = a * a.adjoint();
  CHECK(p(0, 0) == QuadComplex(1));
  CHECK(p(0, 1) == QuadComplex(0));
  CHECK(p(1, 1) == QuadComplex(1));
  M q = a.adjoint() * a - M::Identity(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(q(r, c).is_zero());
}
