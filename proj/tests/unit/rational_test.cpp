#include <doctest.h>

#include <limits>
#include <sstream>

#include "sfcplace/rational.hpp"

using sfcplace::Rational;

TEST_CASE("rational normalizes sign and gcd") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(-7, 2) < Rational(-3));
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("7/4") == Rational(7, 4));
  CHECK(Rational::parse("2.5E2") == Rational(250));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational from_double uses the shortest round-trip decimal") {
  CHECK(Rational::from_double(0.1) == Rational(1, 10));
  CHECK(Rational::from_double(10.2) == Rational(51, 5));
  CHECK(Rational::from_double(-4.0) == Rational(-4));
}

TEST_CASE("rational decimal output") {
  CHECK(Rational(5, 2).decimal() == "2.5");
  CHECK(Rational(-3).decimal() == "-3");
  CHECK(Rational(1, 8).decimal() == "0.125");
  CHECK(Rational(1, 3).decimal() == "0.33333333333333331");
  std::ostringstream os;
  os << Rational(3, 4);
  CHECK(os.str() == "3/4");
}

TEST_CASE("rational overflow is detected") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), sfcplace::RationalOverflow);
  CHECK_THROWS_AS(big * Rational(2), sfcplace::RationalOverflow);
  CHECK(big * Rational(1, 2) == Rational(std::numeric_limits<std::int64_t>::max(), 2));
  CHECK(sfcplace::lcm_checked(4, 6) == 12);
}
