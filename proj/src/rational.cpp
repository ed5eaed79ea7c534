#include "rcurv/rational.hpp"

#include <limits>
#include <ostream>

#include "rcurv/errors.hpp"

namespace rcurv {
namespace {

constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(__int128 v) { return v >= kMin && v <= kMax; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  if (!set_from_i128(num, den)) assign_big(BigRational(BigInt(num), BigInt(den)));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  assign_big(BigRational(num, den));
}

Rational::Rational(BigRational value) { assign_big(value); }

Rational Rational::from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw InvalidParameter("not a rational: '" + text + "'");
  }
}

bool Rational::set_from_i128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) return false;
  num_ = static_cast<std::int64_t>(num);
  den_ = static_cast<std::int64_t>(den);
  big_.reset();
  return true;
}

void Rational::assign_big(const BigRational& value) {
  const BigInt n = boost::multiprecision::numerator(value);
  const BigInt d = boost::multiprecision::denominator(value);
  if (n >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
      n <= BigInt(std::numeric_limits<std::int64_t>::max()) &&
      d <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const BigRational>(value);
  }
}

Rational::BigRational Rational::as_big() const {
  if (big_) return *big_;
  return BigRational(BigInt(num_), BigInt(den_));
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

double Rational::to_double() const {
  if (big_) return big_->convert_to<double>();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(BigRational(-as_big()));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      __int128 s = static_cast<__int128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    } else {
      __int128 n = static_cast<__int128>(num_) * o.den_;
      __int128 m = static_cast<__int128>(o.num_) * den_;
      __int128 s;
      __int128 d;
      if (!__builtin_add_overflow(n, m, &s) &&
          !__builtin_mul_overflow(static_cast<__int128>(den_), static_cast<__int128>(o.den_),
                                  &d) &&
          set_from_i128(s, d)) {
        return *this;
      }
    }
  }
  assign_big(as_big() + o.as_big());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1) {
    __int128 s = static_cast<__int128>(num_) - o.num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return *this;
    }
  }
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    if (d == 1 && fits(n)) {
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    if (set_from_i128(n, d)) return *this;
  }
  assign_big(as_big() * o.as_big());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero");
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    if (set_from_i128(n, d)) return *this;
  }
  assign_big(as_big() / o.as_big());
  return *this;
}

void sub_mul(Rational& a, const Rational& f, const Rational& b) {
  if (!a.big_ && !f.big_ && !b.big_ && a.den_ == 1 && f.den_ == 1 && b.den_ == 1) {
    __int128 v = static_cast<__int128>(a.num_) - static_cast<__int128>(f.num_) * b.num_;
    if (fits(v)) {
      a.num_ = static_cast<std::int64_t>(v);
      return;
    }
  }
  a -= f * b;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.as_big() == b.as_big();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  auto x = a.as_big();
  auto y = b.as_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace rcurv
