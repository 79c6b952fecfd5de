#include "doctest.h"
#include "pencil/rational.hpp"

using namespace pencil;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(9, 18) == Rational(1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(5) / Rational(1, 2)) == Rational(10));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational as_integer guards") {
  CHECK(Rational(8, 4).as_integer() == 2);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
}

TEST_CASE("rational parse and decimal rendering") {
  CHECK(Rational::parse("11/6") == Rational(11, 6));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("4/8").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(Rational(1, 6).decimal(6) == "0.166667");
  CHECK(Rational(-5, 2).decimal(2) == "-2.50");
  CHECK(Rational(59, 11).decimal(6) == "5.363636");
}

TEST_CASE("bracket [a,b] = gcd^2/ab") {
  CHECK(bracket(1, 6) == Rational(1, 6));
  CHECK(bracket(3, 6) == Rational(1, 2));
  CHECK(bracket(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(bracket(0, 3), std::domain_error);
  CHECK_THROWS_AS(bracket(2, -1), std::domain_error);
}

TEST_CASE("bracket symmetry and scaling properties") {
  for (Int a = 1; a <= 12; ++a)
    for (Int b = 1; b <= 12; ++b) {
      CHECK(bracket(a, b) == bracket(b, a));
      CHECK(bracket(a, a) == Rational(1));
      for (Int k = 1; k <= 4; ++k) CHECK(bracket(k * a, k * b) == bracket(a, b));
    }
}

TEST_CASE("negative continued fractions: examples") {
  NegContFrac cf = neg_cont_frac(5, 2);
  REQUIRE(cf.e.size() == 2);
  CHECK(cf.e[0] == 3);
  CHECK(cf.e[1] == 2);
  CHECK(cf.value() == Rational(5, 2));

  cf = neg_cont_frac(2, 1);
  REQUIRE(cf.e.size() == 1);
  CHECK(cf.e[0] == 2);

  // d/(d-1) = [2, 2, ..., 2] with d-1 terms
  for (Int d = 2; d <= 12; ++d) {
    cf = neg_cont_frac(d, d - 1);
    CHECK(Int(cf.e.size()) == d - 1);
    for (const auto& e : cf.e) CHECK(e == 2);
    CHECK(cf.value() == Rational(d, d - 1));
  }
}

TEST_CASE("negative continued fractions: re-evaluation oracle over all d <= 200") {
  for (Int d = 2; d <= 200; ++d)
    for (Int q = 1; q < d; ++q) {
      if (gcd(d, q) != 1) continue;
      NegContFrac cf = neg_cont_frac(d, q);
      REQUIRE(!cf.e.empty());
      for (const auto& e : cf.e) CHECK(e >= 2);
      CHECK(cf.value() == Rational(d, q));
    }
}

TEST_CASE("negative continued fractions: domain errors") {
  CHECK_THROWS_AS(neg_cont_frac(4, 2), std::domain_error);
  CHECK_THROWS_AS(neg_cont_frac(3, 3), std::domain_error);
  CHECK_THROWS_AS(neg_cont_frac(3, 0), std::domain_error);
}

TEST_CASE("mod_inverse examples and bijection property") {
  CHECK(mod_inverse(1, 5) == 1);
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
  for (Int d = 2; d <= 60; ++d)
    for (Int q = 1; q < d; ++q) {
      if (gcd(q, d) != 1) continue;
      Int qp = mod_inverse(q, d);
      CHECK((q * qp) % d == 1);
      CHECK(mod_inverse(qp, d) == q);
    }
}
