#include "knotinv/algebraic.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "knotinv/exactlinalg.hpp"

namespace knotinv {

namespace {

// Reduces a coefficient vector of degree < 15 modulo zeta^8 = zeta^4 - 1.
std::array<Integer, 8> reduce(std::array<Integer, 15>& full) {
  for (int d = 14; d >= 8; --d) {
    if (full[d] == 0) continue;
    full[d - 4] += full[d];
    full[d - 8] -= full[d];
    full[d] = 0;
  }
  std::array<Integer, 8> out;
  for (int d = 0; d < 8; ++d) out[d] = full[d];
  return out;
}

// Columns: coordinates of i^c sqrt2^a sqrt3^b in the zeta power basis.
const RationalMatrix& radical_change_of_basis() {
  static const RationalMatrix inv = [] {
    RationalMatrix m(8, 8);
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) {
          Cyclotomic24 v = 1;
          if (c) v *= Cyclotomic24::i();
          if (b) v *= Cyclotomic24::sqrt3();
          if (a) v *= Cyclotomic24::sqrt2();
          for (int k = 0; k < 8; ++k) m(k, c * 4 + b * 2 + a) = Rational(v.coeffs()[k]);
        }
    return inverse_rational(m);
  }();
  return inv;
}

struct Radical {
  const char* name;
  long prime;
};

// Canonical monomial text: [-][n*][i*]r1^e1*r2^e2, absorbing factors of a
// radical's square into its exponent only when that radical is present.
std::string monomial(Integer n, bool imaginary, const std::vector<std::pair<Radical, bool>>& radicals) {
  std::string out;
  if (n < 0) {
    out = "-";
    n = -n;
  }
  std::vector<std::string> factors;
  std::vector<std::string> rad_text;
  for (const auto& [r, present] : radicals) {
    if (!present) continue;
    long e = 1;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(r.prime))) {
      n /= r.prime;
      e += 2;
    }
    rad_text.push_back(e == 1 ? std::string(r.name) : std::string(r.name) + "^" + std::to_string(e));
  }
  if (n != 1) factors.push_back(n.get_str());
  if (imaginary) factors.push_back("i");
  factors.insert(factors.end(), rad_text.begin(), rad_text.end());
  if (factors.empty()) factors.push_back("1");
  for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  return out;
}

// Sum of rational multiples of named basis terms; "" names the unit.
std::string linear_combination(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, name] : terms) {
    if (coef == 0) continue;
    Rational mag = abs(coef);
    if (coef < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (name.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += name;
    else
      out += mag.get_str() + "*" + name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------------------

Cyclotomic24 Cyclotomic24::zeta(long k) {
  const long m = ((k % 24) + 24) % 24;
  if (m >= 12) return -zeta(m - 12);  // zeta^12 = -1
  Cyclotomic24 v;
  if (m < 8) {
    v.c_[m] = 1;
    return v;
  }
  std::array<Integer, 15> full{};
  full[m] = 1;
  v.c_ = reduce(full);
  return v;
}

bool Cyclotomic24::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Cyclotomic24 Cyclotomic24::conj() const {
  Cyclotomic24 out;
  for (int k = 0; k < 8; ++k)
    if (c_[k] != 0) out += c_[k] * zeta(-k);
  return out;
}

Cyclotomic24 Cyclotomic24::pow(unsigned long e) const {
  Cyclotomic24 result = 1, base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Cyclotomic24& Cyclotomic24::operator+=(const Cyclotomic24& o) {
  for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic24& Cyclotomic24::operator-=(const Cyclotomic24& o) {
  for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic24 operator*(const Cyclotomic24& a, const Cyclotomic24& b) {
  std::array<Integer, 15> full{};
  for (int i = 0; i < 8; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 8; ++j)
      if (b.c_[j] != 0) full[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic24 out;
  out.c_ = reduce(full);
  return out;
}

std::array<Rational, 8> Cyclotomic24::radical_coordinates() const {
  const RationalMatrix& inv = radical_change_of_basis();
  std::array<Rational, 8> out;
  for (int r = 0; r < 8; ++r) {
    Rational acc = 0;
    for (int k = 0; k < 8; ++k)
      if (c_[k] != 0) acc += inv(r, k) * c_[k];
    out[r] = acc;
  }
  return out;
}

std::string Cyclotomic24::str() const {
  static const char* names[8] = {"", "sqrt2", "sqrt3", "sqrt2*sqrt3", "i", "i*sqrt2", "i*sqrt3", "i*sqrt2*sqrt3"};
  const auto coords = radical_coordinates();
  int nonzero = 0, idx = 0;
  for (int r = 0; r < 8; ++r)
    if (coords[r] != 0) {
      ++nonzero;
      idx = r;
    }
  if (nonzero == 0) return "0";
  if (nonzero == 1 && coords[idx].get_den() == 1) {
    return monomial(coords[idx].get_num(), idx & 4,
                    {{Radical{"sqrt2", 2}, (idx & 1) != 0}, {Radical{"sqrt3", 3}, (idx & 2) != 0}});
  }
  std::vector<std::pair<Rational, std::string>> terms;
  for (int r = 0; r < 8; ++r) terms.emplace_back(coords[r], names[r]);
  return linear_combination(terms);
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic24& v) { return os << v.str(); }

// ---------------------------------------------------------------------------

Golden Golden::halves(const Integer& x, const Integer& y) {
  if (mpz_odd_p(Integer(x - y).get_mpz_t())) throw std::invalid_argument("Golden: (x + y sqrt5)/2 needs x = y mod 2");
  return Golden(x, y);
}

Golden& Golden::operator+=(const Golden& o) {
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

Golden& Golden::operator-=(const Golden& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

Golden operator*(const Golden& a, const Golden& b) {
  Integer x = a.x_ * b.x_ + 5 * a.y_ * b.y_;
  Integer y = a.x_ * b.y_ + a.y_ * b.x_;
  // Both are divisible by 2 when the parity invariant holds.
  return Golden(x / 2, y / 2);
}

Golden Golden::inverse_unit() const {
  const Integer n = norm();
  if (n != 1 && n != -1) throw std::domain_error("Golden: " + str() + " is not a unit");
  Golden c = conj();
  return n == 1 ? c : -c;
}

Golden Golden::pow(long e) const {
  Golden base = e < 0 ? inverse_unit() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Golden result = 1;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::string Golden::str() const {
  if (is_zero()) return "0";
  if (y_ == 0 && mpz_even_p(x_.get_mpz_t())) return Integer(x_ / 2).get_str();
  if (x_ == 0 && mpz_even_p(y_.get_mpz_t())) return monomial(y_ / 2, false, {{Radical{"sqrt5", 5}, true}});
  Rational a(x_, Integer(2)), b(y_, Integer(2));
  a.canonicalize();
  b.canonicalize();
  return linear_combination({{a, ""}, {b, "sqrt5"}});
}

std::ostream& operator<<(std::ostream& os, const Golden& v) { return os << v.str(); }

}  // namespace knotinv
