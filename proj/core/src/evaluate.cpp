#include "knotinv/evaluate.hpp"

#include <stdexcept>
#include <vector>

namespace knotinv {

long half_angle_zeta24(JonesPoint point) {
  switch (point) {
    case JonesPoint::One: return 0;
    case JonesPoint::MinusOne: return 6;
    case JonesPoint::Zeta3: return 4;
    case JonesPoint::I: return 3;
    case JonesPoint::Zeta6: return 2;
  }
  throw std::invalid_argument("unknown evaluation point");
}

Cyclotomic24 evaluate_half_integral(const LaurentPolynomial& v, JonesPoint point) {
  const long k = half_angle_zeta24(point);
  return v.evaluate<Cyclotomic24>([k](long e) { return Cyclotomic24::zeta(k * e); });
}

Golden evaluate_at_golden(const LaurentPolynomial& q) {
  const Golden g = Golden::golden_point();
  return q.evaluate<Golden>([&g](long e) { return g.pow(e); });
}

Cyclotomic24 i_power(long k) { return Cyclotomic24::zeta(6 * (((k % 4) + 4) % 4)); }

namespace {

Cyclotomic24 i_sqrt3_power(std::size_t d) { return (Cyclotomic24::i() * Cyclotomic24::sqrt3()).pow(d); }

Integer require_odd_det(const Integer& det, const char* who) {
  if (det <= 0 || mpz_even_p(det.get_mpz_t()))
    throw std::invalid_argument(std::string(who) + ": determinant must be odd and positive, got " + det.get_str());
  return det;
}

}  // namespace

Cyclotomic24 jones_at_zeta6_knot(const Integer& det, std::size_t dim_f3, unsigned r3_parity) {
  require_odd_det(det, "jones_at_zeta6_knot");
  const auto [alpha, q] = split_prime_power(det, Integer(3));
  const Sign s = nu(q) * Sign::parity(static_cast<long>(alpha + r3_parity));
  return Cyclotomic24(s.value()) * i_sqrt3_power(dim_f3);
}

JonesSpecialValues jones_special_values(const LinkInvariantBundle& b, Sign delta3, std::optional<Sign> proper_arf) {
  auto d3 = b.d_p.find(Integer(3));
  if (d3 == b.d_p.end()) throw std::invalid_argument("jones_special_values: bundle lacks d_3");
  // Knots are always proper; links can only be told apart by the caller.
  if (b.components == 1 && !proper_arf) throw std::invalid_argument("jones_special_values: a knot needs its Arf sign");
  const long c1 = b.components - 1;
  JonesSpecialValues v;
  v.at_one = Cyclotomic24(-2).pow(static_cast<unsigned long>(c1));
  v.at_minus_one = i_power(b.sigma) * Cyclotomic24(b.det);
  v.at_zeta3 = Cyclotomic24(c1 % 2 ? -1 : 1);
  if (proper_arf)
    v.at_i = (-Cyclotomic24::sqrt2()).pow(static_cast<unsigned long>(c1)) * Cyclotomic24(proper_arf->value());
  v.at_zeta6 = Cyclotomic24(delta3.value()) * i_power(c1) * i_sqrt3_power(d3->second);
  return v;
}

Golden q_at_golden(const Integer& det, std::size_t d5, unsigned r5_parity) {
  require_odd_det(det, "q_at_golden");
  const auto q = split_prime_power(det, Integer(5)).second;
  const Sign s = legendre_sign(q, Integer(5)) * Sign::parity(static_cast<long>(r5_parity + d5));
  return Golden(s.value()) * Golden::sqrt5().pow(static_cast<long>(d5));
}

Golden q_at_golden_link(const IntegerSymmetricMatrix& m) {
  const Integer five = 5;
  return Golden(delta_p(m, five).value()) * Golden::sqrt5().pow(static_cast<long>(d_p(m, five)));
}

LaurentPolynomial alexander_poly(const SeifertData& a) {
  // det(-A s^2 + A^T) is a polynomial in s of degree <= 2n; recover it by
  // Newton interpolation at integer nodes and divide by s^n.
  const IntegerMatrix& A = a.seifert();
  const long n = static_cast<long>(A.rows());
  const long deg = 2 * n;
  std::vector<Rational> xs, dd;
  for (long k = 0; k <= deg; ++k) {
    const long x = k - n;
    IntegerMatrix P(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) P(i, j) = -A(i, j) * x * x + A(j, i);
    xs.emplace_back(x);
    dd.emplace_back(det_exact(P));
  }
  for (long level = 1; level <= deg; ++level)
    for (long k = deg; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coef(1, dd[deg]);
  for (long k = deg - 1; k >= 0; --k) {
    std::vector<Rational> next(coef.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coef.size(); ++j) {
      next[j + 1] += coef[j];
      next[j] -= coef[j] * xs[k];
    }
    next[0] += dd[k];
    coef = std::move(next);
  }
  LaurentPolynomial out;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    if (coef[j] == 0) continue;
    if (coef[j].get_den() != 1) throw std::logic_error("alexander_poly: non-integral interpolation");
    out.add_term(static_cast<long>(j) - n, coef[j].get_num());
  }
  return out;
}

Cyclotomic24 alexander_at_minus1(const SeifertData& a) {
  return evaluate_half_integral(alexander_poly(a), JonesPoint::MinusOne);
}

}  // namespace knotinv
