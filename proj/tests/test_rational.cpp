// Exact rational arithmetic: canonical form, parsing, powers, string forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"
#include "transcend/errors.hpp"
#include "transcend/rational.hpp"

using transcend::DivisionByZero;
using transcend::Rational;

TEST_CASE("canonical form: gcd one, positive denominator, zero is 0/1") {
  Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  Rational b(3, -6);
  CHECK(b.numerator() == -1);
  CHECK(b.denominator() == 2);
  Rational z(0, 7);
  CHECK(z.numerator() == 0);
  CHECK(z.denominator() == 1);
  CHECK(z.is_zero());
}

TEST_CASE("arithmetic is exact") {
  Rational half(1, 2), third(1, 3);
  CHECK(half + third == Rational(5, 6));
  CHECK(half - third == Rational(1, 6));
  CHECK(half * third == Rational(1, 6));
  CHECK(half / third == Rational(3, 2));
  CHECK(-half == Rational(-1, 2));
  CHECK_THROWS_AS(half / Rational(0), DivisionByZero);
}

TEST_CASE("from_decimal converts exactly") {
  CHECK(Rational::from_decimal("2.5") == Rational(5, 2));
  CHECK(Rational::from_decimal("0.125") == Rational(1, 8));
  CHECK(Rational::from_decimal("17") == Rational(17));
  CHECK(Rational::from_decimal("1.7701") == Rational(17701, 10000));
}

TEST_CASE("from_fraction reads p/q and plain integers") {
  CHECK(Rational::from_fraction("3/4") == Rational(3, 4));
  CHECK(Rational::from_fraction("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_fraction("12") == Rational(12));
  CHECK(Rational::from_fraction("0/1") == Rational(0));
}

TEST_CASE("integer powers, including negative exponents") {
  Rational twothirds(2, 3);
  CHECK(twothirds.pow(3) == Rational(8, 27));
  CHECK(twothirds.pow(0) == Rational(1));
  CHECK(twothirds.pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("string forms") {
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(7).to_string() == "7");
  CHECK(Rational(5, 2).fraction_string() == "5/2");
  CHECK(Rational(7).fraction_string() == "7/1");
  CHECK(Rational(0).fraction_string() == "0/1");
}

TEST_CASE("decimal_string exists exactly for 2^a 5^b denominators") {
  auto d = Rational(5, 2).decimal_string();
  REQUIRE(d.has_value());
  CHECK(*d == "2.5");
  auto e = Rational(1, 8).decimal_string();
  REQUIRE(e.has_value());
  CHECK(*e == "0.125");
  CHECK_FALSE(Rational(1, 3).decimal_string().has_value());
  CHECK_FALSE(Rational(1, 14).decimal_string().has_value());
  auto i = Rational(-12).decimal_string();
  REQUIRE(i.has_value());
  CHECK(*i == "-12");
}

TEST_CASE("field axioms on random values") {
  testutil::Rng rng(0x5eed0001ULL);
  for (int it = 0; it < 1000; ++it) {
    Rational a = testutil::random_rational(rng);
    Rational b = testutil::random_rational(rng);
    Rational c = testutil::random_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("to_double round trip on random decimal strings") {
  testutil::Rng rng(0x5eed0002ULL);
  for (int it = 0; it < 200; ++it) {
    Rational r = testutil::random_rational(rng, 1000);
    const double expected = static_cast<double>(r.numerator().convert_to<long long>()) /
                            static_cast<double>(r.denominator().convert_to<long long>());
    CHECK(r.to_double() == doctest::Approx(expected).epsilon(1e-14));
  }
}
