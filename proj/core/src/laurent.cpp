#include "knotinv/laurent.hpp"

#include <ostream>
#include <stdexcept>

namespace knotinv {

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Integer& coeff) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

Integer LaurentPolynomial::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(long exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::str(const std::string& var, bool half) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const Integer mag = abs(c);
    out += c < 0 ? "-" : (out.empty() ? "" : "+");
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    std::string exp;
    if (half && e % 2 != 0)
      exp = "(" + std::to_string(e) + "/2)";
    else if (half)
      exp = std::to_string(e / 2);
    else
      exp = std::to_string(e);
    if (exp != "1") out += "^" + (exp[0] == '-' ? "(" + exp + ")" : exp);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.str("x", false); }

}  // namespace knotinv
