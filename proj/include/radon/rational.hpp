#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "radon/errors.hpp"

namespace radon {

// Exact rational arithmetic on 64-bit numerator/denominator, always kept in
// lowest terms with a positive denominator.  Intermediate products use 128-bit
// arithmetic and overflow of the reduced result raises ArithmeticOverflow
// instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { assign(num, den); }

  static Rational parse(std::string_view s);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    assign128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    assign128(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) fail(Errc::ArithmeticOverflow, "division by zero");
    assign128(i128(num_) * o.den_, i128(den_) * o.num_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  // "7", "-3/2"; denominator omitted when 1.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  void assign(long long num, long long den) {
    assign128(i128(num), i128(den));
  }

  void assign128(i128 num, i128 den) {
    if (den == 0) fail(Errc::ArithmeticOverflow, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    constexpr i128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax)
      fail(Errc::ArithmeticOverflow, "rational overflow");
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> long long {
    if (t.empty()) fail(Errc::ParseError, "empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) fail(Errc::ParseError, "sign without digits");
    long long v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        fail(Errc::ParseError, "bad rational literal: " + std::string(t));
      if (v > (INT64_MAX - 9) / 10)
        fail(Errc::ArithmeticOverflow, "integer literal too large");
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)),
                  parse_int(s.substr(slash + 1)));
}

}  // namespace radon
