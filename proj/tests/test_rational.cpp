#include <doctest.h>

#include <climits>
#include <gmpxx.h>

#include "nary/rational.hpp"
#include "oracles.hpp"

using nary::Rational;

namespace {

// values near the int64 edge, to push arithmetic through the big path
Rational edgy(oracle::Gen& g) {
  switch (g.integer(0, 3)) {
    case 0: return g.rational(9);
    case 1: return Rational(INT64_MAX - g.integer(0, 5), g.integer(1, 7));
    case 2: return Rational(INT64_MIN + 1 + g.integer(0, 5), g.integer(1, 3));
    default: return Rational(mpq_class("123456789012345678901234567890/7"));
  }
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(Rational::parse("0") == Rational());
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational(6, -8).to_string() == "-3/4");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse("99999999999999999999999").is_big());
  CHECK(Rational::parse("99999999999999999999999").to_string() == "99999999999999999999999");
  for (const char* bad : {"", "1/0", "2/4", "01", "-0", "1/-2", "+1", "1.5", " 1", "1/1", "a"})
    CHECK_THROWS(Rational::parse(bad));
}

TEST_CASE("canonical spill: results that fit return inline") {
  Rational big = Rational(INT64_MAX) + Rational(1);
  CHECK(big.is_big());
  Rational back = big - Rational(1);
  CHECK_FALSE(back.is_big());
  CHECK(back == Rational(INT64_MAX));
  CHECK(Rational(INT64_MIN).to_string() == std::to_string(INT64_MIN));
  CHECK((-Rational(INT64_MIN)).is_big());
}

TEST_CASE("arithmetic agrees with GMP on random values") {
  oracle::Gen g(0x5eed);
  for (int it = 0; it < 4000; ++it) {
    const Rational a = edgy(g), b = edgy(g);
    const mpq_class A = a.to_mpq(), B = b.to_mpq();
    CHECK((a + b).to_mpq() == A + B);
    CHECK((a - b).to_mpq() == A - B);
    CHECK((a * b).to_mpq() == A * B);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == A / B);
    CHECK(((a <=> b) < 0) == (A < B));
    CHECK((a == b) == (A == B));
    CHECK(sums_to_zero(a, b) == (A + B == 0));
    Rational c = edgy(g);
    Rational acc = c;
    acc.add_product(a, b);
    CHECK(acc.to_mpq() == c.to_mpq() + A * B);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("field laws") {
  oracle::Gen g(7);
  for (int it = 0; it < 1000; ++it) {
    const Rational a = g.rational(50), b = g.rational(50), c = g.rational(50);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational());
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS(Rational(1) / Rational());
}

TEST_CASE("copy and move of big values") {
  Rational a = Rational::parse("340282366920938463463374607431768211456");
  Rational b = a;
  Rational c = std::move(a);
  CHECK(b == c);
  CHECK(a.is_zero());
  b = b;  // self assignment
  CHECK(b == c);
}
