#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace tropgw {

using BigInt = boost::multiprecision::cpp_int;

// Element of Q, always in canonical form: gcd(|num|, den) = 1 and den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : v_(value) {}
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p/q" or "p" with an optional leading sign.
  static Rational parse(const std::string& text);

  BigInt num() const;
  BigInt den() const;
  bool is_zero() const { return v_.sign() == 0; }
  bool is_integer() const { return den() == 1; }
  int sign() const { return v_.sign(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(int n);

}  // namespace tropgw
