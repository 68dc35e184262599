#include <doctest.h>

#include <cstdint>

#include "radon/rational.hpp"
#include "test_util.hpp"

using namespace radon;
using radon::testutil::error_code_of;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3) == Rational(2));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(1, 2).den() == 2);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(-1).is_zero());
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
  CHECK(-Rational(3, 2) == Rational(-3, 2));
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
  Rational acc(0);
  for (int k = 1; k <= 10; ++k) acc += Rational(1, k);
  CHECK(acc == Rational(7381, 2520));
}

TEST_CASE("rational comparisons order by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-2, 3) < Rational(-1, 2));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(5, 10) >= Rational(1, 2));
}

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("+4") == Rational(4));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("0") == Rational(0));

  CHECK(error_code_of([] { Rational::parse(""); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("1/"); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("a"); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("1.5"); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("-"); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("1//2"); }) == Errc::ParseError);
  CHECK(error_code_of([] { Rational::parse("1/0"); }) ==
        Errc::ArithmeticOverflow);
}

TEST_CASE("rational string rendering round-trips") {
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(0).str() == "0");
  for (long long n : {-20LL, -7LL, 0LL, 3LL, 19LL})
    for (long long d : {1LL, 2LL, 3LL, 5LL, 7LL}) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("rational overflow raises instead of wrapping") {
  Rational big(INT64_MAX);
  CHECK(error_code_of([&] { return big + big; }) == Errc::ArithmeticOverflow);
  CHECK(error_code_of([&] { return big * Rational(2); }) ==
        Errc::ArithmeticOverflow);
  CHECK(error_code_of([&] { return Rational(1) / Rational(0); }) ==
        Errc::ArithmeticOverflow);
  CHECK(big * Rational(1, INT64_MAX) == Rational(1));
}
