#include "clover/rational.hpp"

#include <stdexcept>

#include "doctest.h"

using clover::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(16, 18) == Rational(8, 9));
  CHECK(Rational(16, 18).numerator() == 8);
  CHECK(Rational(16, 18).denominator() == 9);
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(4, -6).denominator() == 3);
  CHECK(Rational(4, -6).numerator() == -2);
  CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("rational canonical property over a grid") {
  for (long p = -12; p <= 12; ++p) {
    for (long q = 1; q <= 12; ++q) {
      const Rational r(p, q);
      CHECK(r.denominator() > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      // gcd(0, d) = d, and 0 canonicalizes to 0/1
      if (p == 0) {
        CHECK(r.denominator() == 1);
      } else {
        CHECK(g == 1);
      }
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  Rational acc(1);
  for (int i = 1; i <= 5; ++i) acc *= Rational(i, i + 1);
  CHECK(acc == Rational(1, 6));
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4) != Rational(3, 4));
  CHECK(Rational(1, 3) <= Rational(1, 3));
  CHECK(Rational(1, 3) >= Rational(1, 3));
}

TEST_CASE("rational strings") {
  CHECK(Rational(32, 9).to_string() == "32/9");
  CHECK(Rational(8, 2).to_string() == "4");
  CHECK(Rational(-7, 3).to_string() == "-7/3");
  CHECK(Rational::from_string("32/9") == Rational(32, 9));
  CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
  CHECK(Rational::from_string("4") == Rational(4));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS((void)Rational::from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS((void)Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("rational numeric accessors") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(4).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(3, 7).sign() == 1);
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}
