#pragma once

#include <map>
#include <string>

#include "rational.hpp"

namespace tropgw {

// Laurent polynomial in the formal equivariant character kappa, with exact
// rational coefficients. Canonical form: no zero coefficient is ever stored,
// so equality of term maps is equality in Q[kappa, kappa^-1].
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rational& c, int exp);
  static LaurentPoly kappa_pow(int exp) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exp) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // c * kappa^exp * this
  LaurentPoly scale_pow(const Rational& c, int exp) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;  // human-readable, e.g. "-1/2*k^-3"

 private:
  void insert_term(int exp, const Rational& c);
  std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace tropgw
