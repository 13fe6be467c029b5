#include "knotinv/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace knotinv {

Sign Sign::from_int(int v) {
  if (v != 1 && v != -1) throw std::invalid_argument("Sign must be -1 or +1, got " + std::to_string(v));
  return Sign{v};
}

long PAdicValuation::value() const {
  if (!value_) throw std::logic_error("ord_p is infinite");
  return *value_;
}

std::strong_ordering operator<=>(const PAdicValuation& a, const PAdicValuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.value_ <=> *b.value_;
}

PAdicValuation operator+(const PAdicValuation& a, const PAdicValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return PAdicValuation::infinity();
  return PAdicValuation::finite(*a.value_ + *b.value_);
}

std::ostream& operator<<(std::ostream& os, const PAdicValuation& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  strip(Integer(2));
  for (Integer d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.emplace_back(m, 1u);
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

void require_odd_prime(const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw std::invalid_argument("expected an odd prime, got " + p.get_str());
  }
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error(a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return r;
}

int legendre(const Integer& a, const Integer& p) {
  require_odd_prime(p);
  Integer r = mod_floor(a, p);
  if (r == 0) return 0;
  // Euler's criterion.
  Integer e = (p - 1) / 2;
  Integer x;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return x == 1 ? 1 : -1;
}

Sign legendre_sign(const Integer& a, const Integer& p) {
  int l = legendre(a, p);
  if (l == 0) throw std::domain_error(p.get_str() + " divides " + a.get_str());
  return Sign::from_int(l);
}

PAdicValuation ord_p(const Integer& x, const Integer& p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("ord_p: expected a prime, got " + p.get_str());
  if (x == 0) return PAdicValuation::infinity();
  Integer m = x;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return PAdicValuation::finite(v);
}

PAdicValuation ord_p(const Rational& x, const Integer& p) {
  if (x == 0) return PAdicValuation::infinity();
  return PAdicValuation::finite(ord_p(x.get_num(), p).value() - ord_p(x.get_den(), p).value());
}

std::pair<unsigned, Integer> split_prime_power(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("split_prime_power: zero");
  Integer q = abs(n);
  unsigned alpha = 0;
  while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
    q /= p;
    ++alpha;
  }
  return {alpha, q};
}

Sign nu(const Integer& eta) {
  if (mpz_divisible_ui_p(eta.get_mpz_t(), 2) || mpz_divisible_ui_p(eta.get_mpz_t(), 3)) {
    throw std::invalid_argument("nu: argument must be coprime to 6, got " + eta.get_str());
  }
  Integer r = mod_floor(eta, Integer(12));
  return (r == 1 || r == 11) ? Sign{} : -Sign{};
}

bool is_qr_mod(const Integer& a, const Integer& q) {
  if (q < 1 || mpz_even_p(q.get_mpz_t())) {
    throw std::invalid_argument("is_qr_mod: modulus must be odd and positive, got " + q.get_str());
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::invalid_argument("is_qr_mod: gcd(a, q) != 1");
  if (q == 1) return true;
  for (const auto& p : prime_divisors(q)) {
    if (legendre(a, p) != 1) return false;
  }
  return true;
}

Integer least_nonresidue(const Integer& p) {
  require_odd_prime(p);
  for (Integer b = 2;; ++b) {
    if (legendre(b, p) == -1) return b;
  }
}

}  // namespace knotinv
