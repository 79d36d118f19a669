#include "laurent.hpp"

#include <ostream>

#include "error.hpp"

namespace tropgw {

namespace {
// Exponents stay tiny in practice (|e| <= 2n-5 at desk scale); the guard
// catches runaway products long before machine-int overflow.
constexpr long long kExpLimit = 1LL << 20;

int checked_exp(long long e) {
  if (e > kExpLimit || e < -kExpLimit) throw DomainError("laurent: exponent overflow");
  return static_cast<int>(e);
}
}  // namespace

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p;
  p.insert_term(exp, c);
  return p;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::insert_term(int exp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      p.insert_term(checked_exp(static_cast<long long>(ea) + eb), ca * cb);
  return p;
}

LaurentPoly LaurentPoly::scale_pow(const Rational& c, int exp) const {
  LaurentPoly p;
  if (c.is_zero()) return p;
  for (const auto& [e, k] : terms_)
    p.insert_term(checked_exp(static_cast<long long>(e) + exp), c * k);
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (e != 0) out += "*k^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace tropgw
