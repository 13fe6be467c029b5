#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "knotinv/numtheory.hpp"

namespace knotinv {

/// Finitely supported Laurent polynomial with integer coefficients in one
/// variable. Exponents are stored in units chosen by the caller: the Jones and
/// Alexander polynomials use t^{1/2} as the unit, the Q polynomial uses z.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static LaurentPolynomial monomial(long exponent, const Integer& coeff = 1);

  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(long exponent) const;
  long min_exponent() const;
  long max_exponent() const;

  void add_term(long exponent, const Integer& coeff);
  /// Multiplies by the monomial x^k.
  LaurentPolynomial shifted(long k) const;
  /// x -> x^{-1}.
  LaurentPolynomial reflected() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Evaluates with `power(e)` returning x^e in the target ring.
  template <class R, class PowerFn>
  R evaluate(PowerFn&& power) const {
    R acc = 0;
    for (const auto& [e, c] : terms_) acc += R(c) * power(e);
    return acc;
  }

  /// Human-readable text. With `half` set, exponents are printed as halves
  /// of the stored ones, e.g. "-t^(5/2)-t^(1/2)".
  std::string str(const std::string& var, bool half) const;

 private:
  std::map<long, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace knotinv
