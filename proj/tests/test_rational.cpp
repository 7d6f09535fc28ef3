#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "structctl/rational.hpp"

using structctl::Rational;

TEST_CASE("rational normalizes sign and gcd") {
  CHECK(Rational(10, 4) == Rational(5, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(-4, -2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(11, 10).to_double() == doctest::Approx(1.1));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("11/10").to_string() == "11/10");
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "2/3/4"}) {
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
  std::ostringstream os;
  os << Rational(-9, 6);
  CHECK(os.str() == "-3/2");
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // Large intermediates that reduce back into range are fine.
  CHECK(big * Rational(1, 3) * Rational(3) == big);
}
