#include "crn/rational.hpp"

#include <doctest.h>

using namespace crn;

TEST_SUITE("exact_arith")
{
  TEST_CASE("parse_rational accepts integers and fractions")
  {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("1/10") == Rational(1, 10));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
  }

  TEST_CASE("parse_rational rejects decimals and junk")
  {
    CHECK_THROWS_AS(parse_rational("0.1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }

  TEST_CASE("lists and formatting")
  {
    const auto v = parse_rational_list("1,1/10,2");
    REQUIRE(v.size() == 3);
    CHECK(v[1] == Rational(1, 10));
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(Rational(-4)) == "-4");
  }

  TEST_CASE("primitive_integer")
  {
    const RationalVector v{Rational(1, 2), Rational(0), Rational(3, 4)};
    CHECK(primitive_integer(v) == RationalVector{2, 0, 3});
    const RationalVector w{Rational(-2), Rational(4)};
    CHECK(primitive_integer(w) == RationalVector{-1, 2});
    CHECK(primitive_integer(RationalVector{0, 0}) == RationalVector{0, 0});
  }

  TEST_CASE("dot")
  {
    CHECK(dot(RationalVector{1, 2, 3}, RationalVector{Rational(1, 2), 0, -1}) == Rational(-5, 2));
  }
}
