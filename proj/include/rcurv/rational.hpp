#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcurv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in reduced form with positive denominator.
//
// Values that fit into 64-bit numerator/denominator are stored inline and use
// 128-bit intermediates; anything larger spills into an arbitrary-precision
// representation. The simplex tableaux built for curvature LPs stay integral
// almost always, so the inline path carries nearly all of the arithmetic.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_string(const std::string& text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;
  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  double to_double() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q".
  std::string to_fraction_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // a -= f * b, the inner loop of every pivot.
  friend void sub_mul(Rational& a, const Rational& f, const Rational& b);

 private:
  using BigRational = boost::multiprecision::cpp_rational;

  explicit Rational(BigRational value);
  BigRational as_big() const;
  void assign_big(const BigRational& value);
  bool set_from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

}  // namespace rcurv
