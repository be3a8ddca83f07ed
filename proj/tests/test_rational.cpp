#include <doctest.h>

#include <random>

#include "radnorm/rational.hpp"

using radnorm::Rational;

TEST_CASE("rational text format") {
  CHECK(Rational::parse("-3/2").to_string() == "-3/2");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("+7/1").to_string() == "7");
  CHECK(Rational::parse("4/6").to_string() == "2/3");
  CHECK(Rational::parse("-0/5").to_string() == "0");
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("--1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3);
  const Rational b(-1, 6);
  CHECK(a + b == Rational(1, 6));
  CHECK(a - b == Rational(1, 2));
  CHECK(a * b == Rational(-1, 18));
  CHECK(a / b == Rational(-2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
  CHECK_THROWS_AS(Rational(3, 0), std::domain_error);
}

TEST_CASE("integer conversions") {
  CHECK(Rational(12, 4).is_integer());
  CHECK(Rational(12, 4).to_long() == 3);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(1, 3).to_decimal(12) == "0.333333333333");
  CHECK(Rational(36).to_decimal(12) == "36");
  CHECK(Rational(-5, 2).to_decimal(12) == "-2.5");
}

TEST_CASE("rational lists") {
  const auto v = radnorm::parse_rational_list("1,-2/4,3");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == Rational(-1, 2));
  CHECK(radnorm::format_rational_list(v) == "1,-1/2,3");
  CHECK_THROWS(radnorm::parse_rational_list("1,,2"));
}

TEST_CASE("property: results stay reduced and text round-trips") {
  std::mt19937_64 gen(7);
  auto draw = [&] {
    const long p = static_cast<long>(gen() % 41) - 20;
    const long q = 1 + static_cast<long>(gen() % 12);
    return Rational(p, q);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = draw();
    const Rational b = draw();
    for (const Rational& v : {a + b, a - b, a * b, b.is_zero() ? a : a / b, a.pow(3)}) {
      CHECK(v.is_reduced());
      CHECK(v.denominator() > 0);
      CHECK(Rational::parse(v.to_string()) == v);
    }
  }
}
