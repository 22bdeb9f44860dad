#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropent/rational.hpp"

using namespace tropent;

TEST_CASE("parse_rat round trips") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-0") == Rat(0));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(rat_str(Rat(3, 4)) == "3/4");
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK(rat_str(parse_rat("123456789123456789/2")) == "123456789123456789/2");
}

TEST_CASE("parse_rat rejects garbage") {
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("rat_double approximates") {
  CHECK(rat_double(Rat(1, 2)) == doctest::Approx(0.5));
  CHECK(rat_double(Rat(-7, 4)) == doctest::Approx(-1.75));
}

TEST_CASE("exactness survives long chains") {
  Rat x(1, 3);
  for (int i = 0; i < 100; ++i) x = x * Rat(7, 5) + Rat(1, 9);
  Rat y = x;
  for (int i = 0; i < 100; ++i) y = (y - Rat(1, 9)) / Rat(7, 5);
  CHECK(y == Rat(1, 3));
}
