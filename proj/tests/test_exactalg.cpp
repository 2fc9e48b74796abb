#include <doctest.h>

#include "gen.hpp"
#include "macdet/qt_poly.hpp"
#include "macdet/qt_rat.hpp"

using macdet::QtPoly;
using macdet::QtRat;

namespace {
const QtPoly q = QtPoly::q();
const QtPoly t = QtPoly::t();
const QtPoly one(1);
}  // namespace

TEST_CASE("qt_poly arithmetic examples") {
  CHECK((one - t) + t == one);
  CHECK((one - q) * (one + q) == one - q * q);
  CHECK(((one - t) * QtPoly()).is_zero());
}

TEST_CASE("qt_poly text round trip") {
  const QtPoly p = (one - q) * (one - q * t) - QtPoly(3) * t.pow(4);
  CHECK(QtPoly::parse(p.to_string()) == p);
  CHECK((one - q - t + q * t).to_string() == "1-t-q+q*t");
  CHECK(QtPoly::parse("q^5*t+q^2") == q.pow(5) * t + q.pow(2));
}

TEST_CASE("qt_gcd examples") {
  // gcd is unique up to sign; the canonical form has positive leading coefficient.
  const QtPoly g = macdet::qt_gcd(one - q * q, one - q);
  CHECK((g == one - q || g == q - one));
  CHECK(g.sign() > 0);
  CHECK(macdet::qt_gcd(q, t).is_one());
  const QtPoly a = (one - q) * (one - q * t);
  const QtPoly b = (one - q * t) * (one - t);
  const QtPoly h = macdet::qt_gcd(a, b);
  CHECK((h == one - q * t || h == q * t - one));
  CHECK_THROWS_AS(macdet::qt_gcd(QtPoly(), QtPoly()), std::invalid_argument);
}

TEST_CASE("qt_gcd divides both inputs and captures common factors") {
  for (int iter = 0; iter < 200; ++iter) {
    const QtPoly c = gen::nonzero_qt_poly(3, 2, 3);
    const QtPoly a = c * gen::nonzero_qt_poly(3, 2, 3);
    const QtPoly b = c * gen::nonzero_qt_poly(3, 2, 3);
    const QtPoly g = macdet::qt_gcd(a, b);
    QtPoly quo;
    REQUIRE(macdet::try_exact_div(a, g, quo));
    REQUIRE(macdet::try_exact_div(b, g, quo));
    REQUIRE(macdet::try_exact_div(g, c, quo));
  }
}

TEST_CASE("qt_gcd of products of binomials and large coefficients") {
  auto binom = [](int a, int b) { return one - QtPoly::monomial(1, a, b); };
  for (int iter = 0; iter < 50; ++iter) {
    QtPoly common(1);
    QtPoly a(1);
    QtPoly b(1);
    for (int i = 0; i < 3; ++i) common *= binom(gen::uniform(0, 4), gen::uniform(1, 3));
    for (int i = 0; i < 2; ++i) a *= binom(gen::uniform(1, 5), 0);
    for (int i = 0; i < 2; ++i) b *= binom(0, gen::uniform(4, 6));
    const QtPoly g = macdet::qt_gcd(a * common, b * common);
    // a and b share no factor: one is univariate in q, the other in t,
    // and neither has a constant factor.
    CHECK((g == common || g == -common));
  }
  const QtPoly big = QtPoly(mpz_class("1000000000000000000000000000007")) * q + QtPoly(mpz_class("99999999999999999999"));
  const QtPoly g = macdet::qt_gcd(big * (one - t * q), big * (one + t));
  CHECK((g == big || g == -big));
}

TEST_CASE("qt_rat arithmetic examples") {
  const QtRat a(one - q, one - t);
  const QtRat b(one - t, one - q);
  CHECK(a * b == QtRat(1));
  const QtRat lhs(QtPoly((t - q) * (one - q)), -((one - q) * (one - q * t)));
  CHECK(lhs == QtRat(q - t, one - q * t));
  const QtRat x(q + t, one + q);
  CHECK(x / QtRat(1) + QtRat() == x);
  CHECK_THROWS_AS(x / QtRat(), std::domain_error);
  CHECK_THROWS_AS(QtRat(one, QtPoly()), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  for (int iter = 0; iter < 300; ++iter) {
    const QtPoly a = gen::qt_poly();
    const QtPoly b = gen::qt_poly();
    const QtPoly c = gen::qt_poly();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a - a == QtPoly());
  }
}

TEST_CASE("exact division round trip") {
  for (int iter = 0; iter < 300; ++iter) {
    const QtPoly a = gen::qt_poly(5, 4, 7);
    const QtPoly b = gen::nonzero_qt_poly(4, 3, 5);
    REQUIRE(macdet::exact_div(a * b, b) == a);
  }
  QtPoly quo;
  CHECK_FALSE(macdet::try_exact_div(one + q, one + t, quo));
}

TEST_CASE("qt_rat canonical equality agrees with cross multiplication") {
  for (int iter = 0; iter < 300; ++iter) {
    const QtRat a = gen::qt_rat();
    const QtRat b = gen::qt_rat();
    const QtPoly k = gen::nonzero_qt_poly(2, 2, 3);
    const QtRat a2(a.num() * k, a.den() * k);
    REQUIRE(a2 == a);
    REQUIRE(QtRat::cross_equal(a, b) == (a == b));
    REQUIRE((a + b) - b == a);
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
    REQUIRE(a.den().sign() > 0);
  }
}

TEST_CASE("adams and variable swaps") {
  const QtRat x(one - t, one - q);
  CHECK(x.adams(2) == QtRat(one - t * t, one - q * q));
  CHECK(x.swap_qt() == x.inverse());
  CHECK(QtRat::laurent_monomial(-1, 2) == QtRat(t * t, q));
  CHECK(QtRat(one - q * t, one + q).with_t_equal_q() == QtRat(one - q * q, one + q));
}
