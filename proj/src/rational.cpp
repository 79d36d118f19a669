#include "rational.hpp"

#include <ostream>

#include "error.hpp"

namespace tropgw {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational: division by zero");
  // cpp_rational canonicalizes the gcd but insists on a positive denominator
  if (den < 0)
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw UsageError("rational: cannot parse '" + text + "'");
    return Rational(BigInt(text), 1);
  }
  std::string p = text.substr(0, slash), q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw UsageError("rational: cannot parse '" + text + "'");
  BigInt den(q);
  if (den == 0) throw DomainError("rational: division by zero");
  return Rational(BigInt(p), den);
}

BigInt Rational::num() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::den() const { return boost::multiprecision::denominator(v_); }

std::string Rational::str() const {
  if (den() == 1) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace tropgw
