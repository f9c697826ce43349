#include <doctest.h>

#include <numeric>
#include <random>

#include "lctkit/rational.hpp"

using lctkit::Rational;

TEST_CASE("rational text form") {
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("-3/9").str() == "-1/3");
  CHECK(Rational::parse(" 7 ").str() == "7");
  CHECK(Rational::parse("0.45") == Rational(9, 20));
  CHECK(Rational::parse("0.6") == Rational(3, 5));
  CHECK(Rational::parse("-.5") == Rational(-1, 2));
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("123456789012345678901234567890/2").str() == "61728394506172839450617283945");

  CHECK_THROWS_AS(Rational::parse(""), lctkit::UsageError);
  CHECK_THROWS_AS(Rational::parse("1/0"), lctkit::UsageError);
  CHECK_THROWS_AS(Rational::parse("a/3"), lctkit::UsageError);
  CHECK_THROWS_AS(Rational::parse("1/-3"), lctkit::UsageError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), lctkit::UsageError);
  CHECK_THROWS_AS(Rational(1, 0), lctkit::DomainError);
}

TEST_CASE("rational stays reduced with positive denominator") {
  const Rational r(10, -4);
  CHECK(r.num() == -5);
  CHECK(r.den() == 2);
  CHECK(r.floor() == -3);
  CHECK(r.ceil() == -2);
  CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
  CHECK((Rational(1, 6) + Rational(1, 3)).den() == 2);
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK_THROWS_AS(Rational(0).reciprocal(), lctkit::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), lctkit::DomainError);
}

TEST_CASE("property: additive and multiplicative round trips are exact") {
  std::mt19937_64 rng(20241016);
  const auto draw = [&](bool nonzero) {
    for (;;) {
      const long v = static_cast<long>(rng() % 2000001) - 1000000;
      if (!nonzero || v != 0) return v;
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const Rational a(draw(false), draw(true));
    const Rational b(draw(true), draw(true));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(std::gcd(a.num().get_si(), a.den().get_si()) == 1);
    CHECK(a.den() > 0);
  }
}
