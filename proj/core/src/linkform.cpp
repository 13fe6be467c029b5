#include "knotinv/linkform.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace knotinv {

LinkingFormPresentation::LinkingFormPresentation(IntegerSymmetricMatrix m) : m_(std::move(m)) {
  Integer d = det_exact(m_);
  if (d == 0) throw std::domain_error("linking form: presentation matrix is singular");
  order_ = abs(d);
  inv_ = inverse_rational(m_.matrix());
}

Rational reduce_mod_one(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(fl);
  r.canonicalize();
  return r;
}

Rational eval_form(const LinkingFormPresentation& form, const std::vector<Integer>& x, const std::vector<Integer>& y) {
  const std::size_t n = form.size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("eval_form: vector size does not match matrix");
  const RationalMatrix& inv = form.inverse();
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) row += inv(i, j) * y[j];
    acc += row * x[i];
  }
  return reduce_mod_one(acc);
}

WallDecomposition::WallDecomposition(std::vector<WallSummand> summands) {
  std::map<std::pair<Integer, unsigned>, std::pair<std::size_t, std::size_t>> counts;  // (total, #B)
  for (const auto& s : summands) {
    if (s.k == 0) throw std::invalid_argument("Wall summand with k = 0");
    require_odd_prime(s.p);
    auto& c = counts[{s.p, s.k}];
    ++c.first;
    if (s.type == WallType::B) ++c.second;
  }
  for (const auto& [key, c] : counts) {
    const std::size_t b = c.second % 2;
    for (std::size_t i = 0; i < c.first - b; ++i) summands_.push_back({key.first, key.second, WallType::A});
    if (b) summands_.push_back({key.first, key.second, WallType::B});
  }
}

Integer WallDecomposition::order() const {
  Integer o = 1;
  for (const auto& s : summands_) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), s.p.get_mpz_t(), s.k);
    o *= pk;
  }
  return o;
}

unsigned WallDecomposition::r(const Integer& p, unsigned k) const {
  unsigned n = 0;
  for (const auto& s : summands_)
    if (s.p == p && s.k == k && s.type == WallType::A) ++n;
  return n % 2;
}

std::string WallDecomposition::serialize() const {
  std::ostringstream os;
  for (const auto& s : summands_) os << s.p << ' ' << s.k << ' ' << (s.type == WallType::A ? 'A' : 'B') << '\n';
  return os.str();
}

WallDecomposition WallDecomposition::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<WallSummand> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string p, k, t, extra;
    if (!(ls >> p >> k >> t) || (ls >> extra) || (t != "A" && t != "B"))
      throw std::runtime_error("wall decomposition: bad line '" + line + "'");
    WallSummand s;
    if (s.p.set_str(p, 10) != 0) throw std::runtime_error("wall decomposition: bad prime '" + p + "'");
    try {
      s.k = static_cast<unsigned>(std::stoul(k));
    } catch (const std::exception&) {
      throw std::runtime_error("wall decomposition: bad exponent '" + k + "'");
    }
    s.type = t == "A" ? WallType::A : WallType::B;
    out.push_back(s);
  }
  try {
    return WallDecomposition(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("wall decomposition: ") + e.what());
  }
}

WallDecomposition operator+(const WallDecomposition& a, const WallDecomposition& b) {
  std::vector<WallSummand> all = a.summands_;
  all.insert(all.end(), b.summands_.begin(), b.summands_.end());
  return WallDecomposition(std::move(all));
}

std::ostream& operator<<(std::ostream& os, const WallDecomposition& w) { return os << w.serialize(); }

WallDecomposition wall_decompose(const LinkingFormPresentation& form) {
  const Integer& order = form.order();
  if (mpz_even_p(order.get_mpz_t())) throw std::domain_error("wall_decompose: even-order linking forms are not supported");
  std::vector<WallSummand> out;
  if (order == 1) return WallDecomposition{};
  for (const auto& p : prime_divisors(order)) {
    InverseOrdNormalization norm = inverse_ord_normalize(form.matrix(), p);
    // In the normalized basis the p-primary part is an orthogonal sum of
    // cyclic groups generated by multiples of e_i with lambda(e_i, e_i) of
    // ord_p exactly -k_i. Scaling by a p-unit does not change the class.
    for (std::size_t i = 0; i < norm.exponents.size(); ++i) {
      const unsigned k = norm.exponents[i];
      if (k == 0) continue;
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
      const Rational unit = norm.conjugate_inverse(i, i) * pk;
      const int l = legendre(Integer(unit.get_num() * unit.get_den()), p);
      out.push_back({p, k, l == 1 ? WallType::A : WallType::B});
    }
  }
  return WallDecomposition(std::move(out));
}

unsigned wall_parity(const WallDecomposition& w, const Integer& p) {
  unsigned a = 0;
  for (const auto& s : w.summands())
    if (s.p == p && s.type == WallType::A) ++a;
  return a % 2;
}

unsigned wall_b_parity(const WallDecomposition& w, const Integer& p) {
  unsigned b = 0;
  for (const auto& s : w.summands())
    if (s.p == p && s.type == WallType::B) ++b;
  return b % 2;
}

Sign delta_p_from_linking_form(const WallDecomposition& w, const Integer& det, std::size_t m, const Integer& p) {
  require_odd_prime(p);
  if (det == 0 || mpz_even_p(det.get_mpz_t())) throw std::domain_error("delta_p_from_linking_form: det must be odd");
  const auto [alpha, q] = split_prime_power(det, p);
  Sign s = legendre_sign(q, p) * Sign::parity(static_cast<long>(wall_b_parity(w, p)));
  if (mod_floor(p, Integer(4)) == 3) {
    const Integer e = Integer(alpha) + Integer(static_cast<unsigned long>(m)) + (q - 1) / 2;
    s *= Sign::parity(e);
  }
  return s;
}

bool isometric(const WallDecomposition& a, const WallDecomposition& b) { return a == b; }

}  // namespace knotinv
