#include "doctest.h"

#include <cstdint>
#include <limits>
#include <random>

#include "rcurv/rational.hpp"

using rcurv::BigInt;
using rcurv::Rational;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_fraction_string() == "0/1");
  CHECK(Rational(7).to_fraction_string() == "7/1");
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
  CHECK(Rational::from_string("12") == Rational(12));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a > b);
  CHECK(-a < b);
  CHECK(abs(Rational(-3, 7)) == Rational(3, 7));
  Rational c(5);
  sub_mul(c, Rational(2, 3), Rational(3, 4));
  CHECK(c == Rational(9, 2));
}

TEST_CASE("rational overflow spills to big integers") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational r(big);
  Rational sq = r * r;
  CHECK(sq.numerator() == BigInt(big) * BigInt(big));
  CHECK(sq / r == r);
  CHECK(sq - sq == Rational(0));
  Rational tiny(1, big);
  CHECK((tiny * tiny).denominator() == BigInt(big) * BigInt(big));
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()) < Rational(0));
  CHECK(-Rational(std::numeric_limits<std::int64_t>::min()) > Rational(big));
}

TEST_CASE("rational agrees with cpp_rational on random data") {
  using Big = boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int iter = 0; iter < 2000; ++iter) {
    std::int64_t p = wide(rng), q = wide(rng), r = wide(rng), s = wide(rng);
    if (q == 0 || s == 0 || r == 0) continue;
    Rational x(p, q);
    Rational y(r, s);
    Big bx = Big(p) / Big(q);
    Big by = Big(r) / Big(s);
    auto same = [](const Rational& a, const Big& b) {
      return a.numerator() == boost::multiprecision::numerator(b) &&
             a.denominator() == boost::multiprecision::denominator(b);
    };
    CHECK(same(x + y, bx + by));
    CHECK(same(x - y, bx - by));
    CHECK(same(x * y, bx * by));
    CHECK(same(x / y, bx / by));
    CHECK(((x < y) == (bx < by)));
    Rational z = x;
    sub_mul(z, y, x);
    CHECK(same(z, bx - by * bx));
  }
}
