#include <random>

#include "cuspg2/errors.hpp"
#include "cuspg2/scalar.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cuspg2::AlgebraicScalar;
using cuspg2::Rational;

TEST_CASE("basis multiplication") {
  CHECK(AlgebraicScalar::sqrt2() * AlgebraicScalar::sqrt5() == AlgebraicScalar::sqrt10());
  const AlgebraicScalar half_r10 = AlgebraicScalar::sqrt10() * Rational(1, 2);
  CHECK(half_r10 * half_r10 == AlgebraicScalar(Rational(5, 2)));
  CHECK(AlgebraicScalar::i() * (AlgebraicScalar(-5) * AlgebraicScalar::i()) == AlgebraicScalar(5));
  CHECK(AlgebraicScalar::i() * AlgebraicScalar::i() == AlgebraicScalar(-1));
}

TEST_CASE("conjugation") {
  CHECK(AlgebraicScalar::i().conj() == -AlgebraicScalar::i());
  const auto a = AlgebraicScalar(Rational(3, 4)) + AlgebraicScalar::basis_element(AlgebraicScalar::kISqrt2);
  const auto b = AlgebraicScalar(Rational(3, 4)) - AlgebraicScalar::basis_element(AlgebraicScalar::kISqrt2);
  CHECK(a.conj() == b);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = test_support::random_scalar(rng);
    const auto y = test_support::random_scalar(rng);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = test_support::random_scalar(rng);
    const auto b = test_support::random_scalar(rng);
    const auto c = test_support::random_scalar(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == AlgebraicScalar(1));
    const auto product = a * b;
    for (const auto& q : product.coords()) REQUIRE(gcd(q.get_num(), q.get_den()) == 1);
  }
}

TEST_CASE("real subfield is closed") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = test_support::random_scalar(rng, true);
    const auto b = test_support::random_scalar(rng, true);
    CHECK((a * b).is_real());
    CHECK((a + b).is_real());
    if (!b.is_zero()) CHECK((a / b).is_real());
  }
}

TEST_CASE("inverse of zero") {
  CHECK_THROWS_AS(AlgebraicScalar().inverse(), cuspg2::DivisionByZero);
  CHECK_THROWS_AS(AlgebraicScalar(1) / AlgebraicScalar(), cuspg2::DivisionByZero);
}

TEST_CASE("norm is rational and multiplicative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = test_support::random_scalar(rng);
    const auto b = test_support::random_scalar(rng);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
  CHECK(AlgebraicScalar::sqrt10().norm() == 10000);
}

TEST_CASE("serialization round trip") {
  const auto a = AlgebraicScalar::parse("(1/2)*r10 + (-3)*i");
  CHECK(a[AlgebraicScalar::kSqrt10] == Rational(1, 2));
  CHECK(a[AlgebraicScalar::kI] == -3);
  CHECK(a.to_string() == "(-3)*i + (1/2)*r10");
  CHECK(AlgebraicScalar::parse("(1/2)*r10 + (\xE2\x88\x92" "3)*i") == a);
  CHECK(AlgebraicScalar::parse("2 - ir5 + 3/7*r2") ==
        AlgebraicScalar(2) - AlgebraicScalar::basis_element(AlgebraicScalar::kISqrt5) +
            AlgebraicScalar::basis_element(AlgebraicScalar::kSqrt2, Rational(3, 7)));
  CHECK(AlgebraicScalar().to_string() == "0");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = test_support::random_scalar(rng);
    CHECK(AlgebraicScalar::parse(x.to_string()) == x);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    AlgebraicScalar::parse("1 + 2*r7");
    FAIL("expected a parse error");
  } catch (const cuspg2::ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(AlgebraicScalar::parse(""), cuspg2::ParseError);
  CHECK_THROWS_AS(AlgebraicScalar::parse("(1/0)"), cuspg2::ParseError);
  CHECK_THROWS_AS(cuspg2::parse_rational("3/0"), cuspg2::DomainError);
}

TEST_CASE("rational helpers") {
  CHECK(cuspg2::binomial(6, 3) == 20);
  CHECK(cuspg2::binomial(3, 5) == 0);
  CHECK(cuspg2::factorial(6) == 720);
  CHECK(cuspg2::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(cuspg2::parse_rational("-6/4") == Rational(-3, 2));
}
