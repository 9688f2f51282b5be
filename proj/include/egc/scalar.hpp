#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace egc {

/// Exact rational number. Always canonical: positive denominator,
/// gcd(|numerator|, denominator) = 1. All probabilities, edge weights and
/// curl values in this library are Scalars; nothing is ever rounded.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(long num, long den);

  /// Accepts "a/b", plain integers, and finite decimals ("0.25", ".9", "-3").
  /// Decimals are read as exact tenths/hundredths/..., never via floating point.
  static Scalar parse(std::string_view text);

  static Scalar from_raw(mpq_class q);

  /// Renders "a/b", or just "a" when the denominator is 1. parse(str()) == *this.
  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Scalar operator-() const { return from_raw(-v_); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

Scalar abs(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar pow(const Scalar& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace egc
