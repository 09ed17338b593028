#include "cobweb/rational.hpp"

#include "cobweb/errors.hpp"

#include <doctest.h>

#include <random>

using cobweb::integer;
using cobweb::rational;

TEST_CASE("construction reduces to lowest terms") {
  CHECK(rational(6, 4) == rational(3, 2));
  CHECK(rational(6, 4).numerator() == 3);
  CHECK(rational(6, 4).denominator() == 2);
  CHECK(rational(12, 3).is_integer());
  CHECK(rational(12, 3).numerator() == 4);
  CHECK(rational(0, 5) == rational());
  CHECK(rational(0, 5).denominator() == 1);
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(rational(1, 0), cobweb::error);
  CHECK_THROWS_AS(rational(1, -2), cobweb::error);
  CHECK_THROWS_AS(rational(-1, 2), cobweb::error);
}

TEST_CASE("multiplication stays reduced") {
  CHECK(rational(3, 2) * rational(2, 3) == rational(1, 1));
  CHECK(rational(4, 9) * rational(3, 8) == rational(1, 6));
  CHECK(rational(0, 1) * rational(7, 5) == rational());
  CHECK(rational::whole(6) * rational(1, 2) == rational::whole(3));
}

TEST_CASE("lowest-terms invariant holds on random inputs") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    const integer num = integer(rng() % 10000);
    const integer den = integer(1 + rng() % 10000);
    const rational r(num, den);
    CHECK(gcd(r.numerator(), r.denominator()) == 1);
    CHECK(r.denominator() >= 1);
    CHECK(r.numerator() * den == num * r.denominator());
  }
}

TEST_CASE("formatting") {
  CHECK(rational(3, 2).str() == "3/2");
  CHECK(rational(6, 1).str() == "6");
  CHECK(rational(6, 2).str() == "3");
  CHECK(rational().str() == "0");
}
