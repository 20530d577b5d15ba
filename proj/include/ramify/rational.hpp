#pragma once

#include <numeric>
#include <string>

#include "ramify/errors.hpp"

namespace ramify {

// Exact rational on machine integers.  Break values and Hasse-Herbrand
// evaluations stay tiny, so 64-bit parts with 128-bit intermediates suffice.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) { set(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  long long floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  long long ceil() const { return -Rational(-num_, den_).floor(); }

  Rational operator+(const Rational& o) const {
    return Rational::from128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                             (__int128)den_ * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }
  Rational operator*(const Rational& o) const {
    return Rational::from128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) fail(Errc::BadSpec, "rational division by zero");
    return Rational::from128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  static Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void set(long long n, long long d) {
    if (d == 0) fail(Errc::BadSpec, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::BadSpec, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    n /= a;
    d /= a;
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  long long num_, den_;
};

}  // namespace ramify
