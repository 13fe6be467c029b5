#pragma once

// Elementary number theory over exact integers: Legendre symbols, p-adic
// valuations, quadratic residues modulo odd integers and the mod-12 sign nu.

#include <compare>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace knotinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// A value in {-1, +1}.
class Sign {
 public:
  constexpr Sign() = default;

  /// Throws std::invalid_argument unless v is -1 or +1.
  static Sign from_int(int v);
  /// (-1)^e.
  static Sign parity(long e) { return Sign{(e % 2 == 0) ? 1 : -1}; }
  static Sign parity(const Integer& e) { return Sign{mpz_even_p(e.get_mpz_t()) ? 1 : -1}; }

  constexpr int value() const { return v_; }
  constexpr bool positive() const { return v_ > 0; }
  constexpr Sign operator-() const { return Sign{-v_}; }
  friend constexpr Sign operator*(Sign a, Sign b) { return Sign{a.v_ * b.v_}; }
  Sign& operator*=(Sign o) {
    v_ *= o.v_;
    return *this;
  }
  friend constexpr bool operator==(Sign, Sign) = default;
  friend std::ostream& operator<<(std::ostream& os, Sign s) { return os << (s.v_ > 0 ? "+1" : "-1"); }

 private:
  constexpr explicit Sign(int v) : v_(v) {}
  int v_ = 1;
};

/// ord_p of a rational; the infinite value is reserved for zero.
class PAdicValuation {
 public:
  static PAdicValuation infinity() { return PAdicValuation{}; }
  static PAdicValuation finite(long v) { return PAdicValuation{v}; }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on the infinite valuation.
  long value() const;

  friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;
  friend std::strong_ordering operator<=>(const PAdicValuation& a, const PAdicValuation& b);
  friend std::strong_ordering operator<=>(const PAdicValuation& a, long b) {
    return a <=> PAdicValuation::finite(b);
  }
  friend bool operator==(const PAdicValuation& a, long b) { return a == PAdicValuation::finite(b); }

  /// Sum of valuations (infinity absorbs).
  friend PAdicValuation operator+(const PAdicValuation& a, const PAdicValuation& b);
  friend std::ostream& operator<<(std::ostream& os, const PAdicValuation& v);

 private:
  PAdicValuation() = default;
  explicit PAdicValuation(long v) : value_(v) {}
  std::optional<long> value_;
};

/// Deterministic primality by trial division.
bool is_prime(const Integer& n);

/// Prime factorization of |n| by trial division, primes ascending. Throws on n == 0.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// Distinct prime divisors of |n|, ascending. Empty for n = +-1.
std::vector<Integer> prime_divisors(const Integer& n);

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(const Integer& p);

/// Legendre symbol (a|p) in {-1, 0, +1} for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Sign-valued Legendre symbol; throws std::domain_error when p divides a.
Sign legendre_sign(const Integer& a, const Integer& p);

PAdicValuation ord_p(const Rational& x, const Integer& p);
PAdicValuation ord_p(const Integer& x, const Integer& p);

/// Splits |n| = p^alpha * q with q coprime to p. n must be nonzero.
std::pair<unsigned, Integer> split_prime_power(const Integer& n, const Integer& p);

/// +1 for eta = +-1 (mod 12), -1 for eta = +-5 (mod 12); eta coprime to 6.
Sign nu(const Integer& eta);

/// Whether a is a square modulo the odd positive integer q (gcd(a, q) = 1).
bool is_qr_mod(const Integer& a, const Integer& q);

/// Least positive quadratic non-residue modulo the odd prime p.
Integer least_nonresidue(const Integer& p);

/// Non-negative remainder of a modulo m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

/// Inverse of a modulo m; throws std::domain_error if not invertible.
Integer inverse_mod(const Integer& a, const Integer& m);

}  // namespace knotinv
