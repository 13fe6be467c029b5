#pragma once

// Exact algebraic values for the special evaluations.
//
// Cyclotomic24 is Z[zeta] with zeta = exp(2 pi i / 24), stored in the power
// basis 1, zeta, ..., zeta^7 modulo zeta^8 = zeta^4 - 1. It contains i, sqrt2,
// sqrt3 and every t^{1/2} needed for t in {1, -1, zeta_3, i, zeta_6}.
//
// Golden is Z[phi] with phi = (1 + sqrt5)/2, stored as (x + y sqrt5)/2 with
// x = y (mod 2).

#include <array>
#include <iosfwd>
#include <string>

#include "knotinv/numtheory.hpp"

namespace knotinv {

class Cyclotomic24 {
 public:
  Cyclotomic24() = default;
  Cyclotomic24(long n) { c_[0] = n; }  // NOLINT(google-explicit-constructor)
  Cyclotomic24(const Integer& n) { c_[0] = n; }  // NOLINT(google-explicit-constructor)

  /// zeta^k for any integer k.
  static Cyclotomic24 zeta(long k);
  static Cyclotomic24 i() { return zeta(6); }
  static Cyclotomic24 sqrt2() { return zeta(3) + zeta(-3); }
  static Cyclotomic24 sqrt3() { return zeta(2) + zeta(-2); }

  const std::array<Integer, 8>& coeffs() const { return c_; }
  bool is_zero() const;

  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic24 conj() const;
  Cyclotomic24 pow(unsigned long e) const;

  Cyclotomic24& operator+=(const Cyclotomic24& o);
  Cyclotomic24& operator-=(const Cyclotomic24& o);
  Cyclotomic24& operator*=(const Cyclotomic24& o) { return *this = *this * o; }
  friend Cyclotomic24 operator+(Cyclotomic24 a, const Cyclotomic24& b) { return a += b; }
  friend Cyclotomic24 operator-(Cyclotomic24 a, const Cyclotomic24& b) { return a -= b; }
  friend Cyclotomic24 operator-(const Cyclotomic24& a) { return Cyclotomic24{} - a; }
  friend Cyclotomic24 operator*(const Cyclotomic24& a, const Cyclotomic24& b);
  friend bool operator==(const Cyclotomic24&, const Cyclotomic24&) = default;

  /// Coordinates over Q in the basis i^c sqrt2^a sqrt3^b (a, b, c in {0,1}),
  /// indexed by c*4 + b*2 + a.
  std::array<Rational, 8> radical_coordinates() const;

  /// Canonical text, e.g. "-2*i", "i*sqrt3^3", "sqrt2", or a sum of radical terms.
  std::string str() const;

 private:
  std::array<Integer, 8> c_{};
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic24& v);

class Golden {
 public:
  Golden() = default;
  Golden(long n) : x_(2 * n) {}  // NOLINT(google-explicit-constructor)
  Golden(const Integer& n) : x_(2 * n) {}  // NOLINT(google-explicit-constructor)

  /// (x + y sqrt5)/2; throws std::invalid_argument unless x = y (mod 2).
  static Golden halves(const Integer& x, const Integer& y);
  static Golden sqrt5() { return halves(0, 2); }
  static Golden phi() { return halves(1, 1); }
  /// (sqrt5 - 1)/2 = 1/phi.
  static Golden golden_point() { return halves(-1, 1); }

  const Integer& twice_rational() const { return x_; }
  const Integer& twice_sqrt5() const { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  /// Galois conjugate sqrt5 -> -sqrt5.
  Golden conj() const { return Golden(x_, -y_); }
  Integer norm() const { return (x_ * x_ - 5 * y_ * y_) / 4; }
  /// Integer power; negative exponents require a unit.
  Golden pow(long e) const;
  /// Inverse of a unit (norm +-1); throws std::domain_error otherwise.
  Golden inverse_unit() const;

  Golden& operator+=(const Golden& o);
  Golden& operator-=(const Golden& o);
  Golden& operator*=(const Golden& o) { return *this = *this * o; }
  friend Golden operator+(Golden a, const Golden& b) { return a += b; }
  friend Golden operator-(Golden a, const Golden& b) { return a -= b; }
  friend Golden operator-(const Golden& a) { return Golden(-a.x_, -a.y_); }
  friend Golden operator*(const Golden& a, const Golden& b);
  friend bool operator==(const Golden&, const Golden&) = default;

  /// Canonical text, e.g. "-sqrt5", "5", "1/2+1/2*sqrt5".
  std::string str() const;

 private:
  Golden(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {}
  Integer x_;
  Integer y_;
};

std::ostream& operator<<(std::ostream& os, const Golden& v);

}  // namespace knotinv
