#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "knotinv/corpus.hpp"
#include "knotinv/evaluate.hpp"
#include "test_util.hpp"

using namespace knotinv;
using knotinv::testing::random_even_symmetric;

namespace {

using Complex = std::complex<double>;

// Floating shadows; only ever compared against, never used to decide a value.
Complex shadow(const Cyclotomic24& v) {
  Complex s = 0;
  for (std::size_t k = 0; k < 8; ++k)
    s += v.coeffs()[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / 24);
  return s;
}

double shadow(const Golden& g) {
  return (g.twice_rational().get_d() + g.twice_sqrt5().get_d() * std::sqrt(5.0)) / 2;
}

Complex shadow_eval(const LaurentPolynomial& p, JonesPoint point) {
  const double angle = 2 * std::numbers::pi * static_cast<double>(half_angle_zeta24(point)) / 24;
  Complex s = 0;
  for (const auto& [e, c] : p.terms()) s += c.get_d() * std::polar(1.0, angle * static_cast<double>(e));
  return s;
}

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(-12, 12);
  LaurentPolynomial p;
  for (int k = 0; k < 6; ++k) p.add_term(exp(rng), coeff(rng));
  return p;
}

const Cyclotomic24 kI = Cyclotomic24::i();
const Cyclotomic24 kISqrt3 = Cyclotomic24::i() * Cyclotomic24::sqrt3();

}  // namespace

TEST(HalfAngle, Points) {
  EXPECT_EQ(half_angle_zeta24(JonesPoint::One), 0);
  EXPECT_EQ(half_angle_zeta24(JonesPoint::MinusOne), 6);
  EXPECT_EQ(half_angle_zeta24(JonesPoint::Zeta3), 4);
  EXPECT_EQ(half_angle_zeta24(JonesPoint::I), 3);
  EXPECT_EQ(half_angle_zeta24(JonesPoint::Zeta6), 2);
}

TEST(AlgebraicShadow, ArithmeticMatchesComplexNumbers) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < 500; ++t) {
    Cyclotomic24 a, b;
    for (long k = 0; k < 8; ++k) {
      a += Cyclotomic24(c(rng)) * Cyclotomic24::zeta(k);
      b += Cyclotomic24(c(rng)) * Cyclotomic24::zeta(k);
    }
    EXPECT_LT(std::abs(shadow(a * b) - shadow(a) * shadow(b)), 1e-9);
    EXPECT_LT(std::abs(shadow(a + b) - shadow(a) - shadow(b)), 1e-9);
    EXPECT_LT(std::abs(shadow(a.conj()) - std::conj(shadow(a))), 1e-9);
    const Golden g = Golden::halves(c(rng) * 2 + 1, c(rng) * 2 + 1), h = Golden(c(rng)) + Golden::sqrt5() * c(rng);
    EXPECT_LT(std::abs(shadow(g * h) - shadow(g) * shadow(h)), 1e-9);
  }
  EXPECT_LT(std::abs(shadow(Cyclotomic24::sqrt2()) - std::sqrt(2.0)), 1e-12);
  EXPECT_LT(std::abs(shadow(Cyclotomic24::sqrt3()) - std::sqrt(3.0)), 1e-12);
  EXPECT_LT(std::abs(shadow(Golden::golden_point()) - (std::sqrt(5.0) - 1) / 2), 1e-12);
}

TEST(AlgebraicShadow, EvaluationMatchesComplexNumbers) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_poly(rng);
    for (auto pt : {JonesPoint::One, JonesPoint::MinusOne, JonesPoint::Zeta3, JonesPoint::I, JonesPoint::Zeta6})
      EXPECT_LT(std::abs(shadow(evaluate_half_integral(p, pt)) - shadow_eval(p, pt)), 1e-9);
    double z = 0;
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (const auto& [e, c] : p.terms()) z += c.get_d() * std::pow(g, static_cast<double>(e));
    EXPECT_LT(std::abs(shadow(evaluate_at_golden(p)) - z), 1e-6 * (1 + std::abs(z)));
  }
}

TEST(CanonicalText, Examples) {
  EXPECT_EQ((-2 * kI).str(), "-2*i");
  EXPECT_EQ(kISqrt3.str(), "i*sqrt3");
  EXPECT_EQ((-Golden::sqrt5()).str(), "-sqrt5");
  EXPECT_EQ(Golden(5).str(), "5");
  EXPECT_EQ(Cyclotomic24::sqrt2().str(), "sqrt2");
}

TEST(JonesAtZeta6Knot, Unknot) {
  EXPECT_EQ(jones_at_zeta6_knot(1, 0, 0), Cyclotomic24(1));
  EXPECT_THROW(jones_at_zeta6_knot(4, 0, 0), std::invalid_argument);
}

TEST(JonesAtZeta6Knot, PretzelMatchesDeltaThree) {
  const IntegerSymmetricMatrix m{{22, 17}, {17, 22}};
  const auto w = wall_decompose(LinkingFormPresentation(m));
  const auto v = jones_at_zeta6_knot(195, d_p(m, 3), wall_parity(w, 3));
  EXPECT_EQ(v, Cyclotomic24(delta_p(m, 3).value()) * kISqrt3);
}

TEST(JonesAtZeta6Knot, AgreesWithDeltaThreeOnRandomKnotMatrices) {
  // Odd determinant 2g x 2g even matrices stand in for knot Seifert matrices.
  std::mt19937_64 rng(43);
  int made = 0;
  while (made < 300) {
    const auto m = random_even_symmetric(rng, 2 + 2 * (made % 2), 5);
    const Integer det = abs(det_exact(m));
    if (det == 0 || mpz_even_p(det.get_mpz_t())) continue;
    ++made;
    const auto w = wall_decompose(LinkingFormPresentation(m));
    const std::size_t d3 = d_p(m, 3), d5 = d_p(m, 5);
    EXPECT_EQ(jones_at_zeta6_knot(det, d3, wall_parity(w, 3)),
              Cyclotomic24(delta_p(m, 3).value()) * kISqrt3.pow(d3))
        << m.matrix();
    EXPECT_EQ(q_at_golden(det, d5, wall_parity(w, 5)), q_at_golden_link(m)) << m.matrix();
  }
}

TEST(JonesAtZeta6Knot, TrefoilMatchesBracket) {
  const auto corpus = load_corpus(default_corpus_dir());
  const auto& e = find_entry(corpus, "3_1");
  const auto a = seifert_matrix_from_diagram(*e.diagram);
  const auto& m = a.symmetrized();
  const auto w = wall_decompose(LinkingFormPresentation(m));
  const auto closed = jones_at_zeta6_knot(abs(det_exact(m)), d_p(m, 3), wall_parity(w, 3));
  EXPECT_EQ(evaluate_half_integral(jones_via_bracket(*e.diagram), JonesPoint::Zeta6), closed);
  EXPECT_TRUE(closed == kISqrt3 || closed == -kISqrt3);
}

// Reading r_{p,k} as the number of A summands and plugging it straight into
// the closed forms gives the wrong sign; the B count is what the forms need.
TEST(ClosedForms, LiteralAReadingFailsOnFigureEight) {
  const IntegerSymmetricMatrix m{{2, -1}, {-1, -2}};  // 4_1
  const auto w = wall_decompose(LinkingFormPresentation(m));
  ASSERT_EQ(w, WallDecomposition({{5, 1, WallType::B}}));
  const Golden literal = Golden(legendre(1, 5)) * Golden(wall_parity(w, 5) ? -1 : 1) * Golden::sqrt5();
  const Golden actual = q_at_golden(5, 1, wall_parity(w, 5));
  EXPECT_EQ(actual, -Golden::sqrt5());
  EXPECT_NE(literal, actual);
  const auto corpus = load_corpus(default_corpus_dir());
  EXPECT_EQ(evaluate_at_golden(q_via_skein(*find_entry(corpus, "4_1").diagram)), actual);
}

TEST(QAtGolden, Examples) {
  const IntegerSymmetricMatrix m{{22, 17}, {17, 22}};
  const auto w = wall_decompose(LinkingFormPresentation(m));
  EXPECT_EQ(q_at_golden(195, d_p(m, 5), wall_parity(w, 5)), -Golden::sqrt5());
  EXPECT_EQ(q_at_golden_link(m), -Golden::sqrt5());
  // d_5 = 0: the sign is (det | 5).
  EXPECT_EQ(q_at_golden(3, 0, 0), Golden(-1));
  EXPECT_EQ(q_at_golden(9, 0, 0), Golden(1));
  EXPECT_THROW(q_at_golden(10, 1, 0), std::invalid_argument);
  for (std::size_t c = 1; c <= 4; ++c)
    EXPECT_EQ(q_at_golden_link(IntegerSymmetricMatrix::zero(c - 1)), Golden::sqrt5().pow(static_cast<long>(c) - 1));
}

TEST(JonesSpecialValues, HopfLinks) {
  for (int s : {1, -1}) {
    const SeifertData a(IntegerMatrix{{-s}});  // H+ for s = 1
    const auto b = classical_invariants(a, {3});
    const auto v = jones_special_values(b, b.delta_p.at(3), b.arf_sign);
    EXPECT_EQ(v.at_one, Cyclotomic24(-2));
    EXPECT_EQ(v.at_minus_one, Cyclotomic24(-2 * s) * kI);
    EXPECT_EQ(v.at_zeta3, Cyclotomic24(-1));
    EXPECT_TRUE(v.at_i.is_zero());
    EXPECT_EQ(v.at_zeta6, Cyclotomic24(-s) * kI);
  }
}

TEST(JonesSpecialValues, Unknot) {
  const auto b = classical_invariants(SeifertData(IntegerMatrix(0, 0)), {3});
  const auto v = jones_special_values(b, b.delta_p.at(3), b.arf_sign);
  for (const auto& x : {v.at_one, v.at_minus_one, v.at_zeta3, v.at_i, v.at_zeta6}) EXPECT_EQ(x, Cyclotomic24(1));
}

TEST(JonesSpecialValues, RejectsMissingArfForKnot) {
  const auto b = classical_invariants(SeifertData(IntegerMatrix{{-1, 1}, {0, -1}}), {3});
  EXPECT_THROW(jones_special_values(b, b.delta_p.at(3), std::nullopt), std::invalid_argument);
  // A link without an Arf sign is taken to be non-proper: V(i) = 0.
  const auto h = classical_invariants(SeifertData(IntegerMatrix{{-1}}), {3});
  EXPECT_TRUE(jones_special_values(h, h.delta_p.at(3), std::nullopt).at_i.is_zero());
}

TEST(Alexander, Examples) {
  const SeifertData unknot(IntegerMatrix(0, 0));
  EXPECT_EQ(alexander_poly(unknot), LaurentPolynomial(1));
  EXPECT_EQ(alexander_at_minus1(unknot), Cyclotomic24(1));
  const SeifertData hopf(IntegerMatrix{{-1}});
  EXPECT_EQ(alexander_at_minus1(hopf), 2 * kI);
  // V(-1) = (-1)^{c-1} Delta(-1) for H+.
  EXPECT_EQ(-alexander_at_minus1(hopf), -2 * kI);
  // Trefoil: Delta = t^{-1} - 1 + t, i.e. half-exponents -2, 0, 2.
  LaurentPolynomial tref;
  tref.add_term(-2, 1);
  tref.add_term(0, -1);
  tref.add_term(2, 1);
  EXPECT_EQ(alexander_poly(SeifertData(IntegerMatrix{{-1, 1}, {0, -1}})), tref);
}

TEST(Alexander, ValueAtMinusOneIsSignatureTwistedDeterminant) {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> ent(-4, 4);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = ent(rng);
    const SeifertData s(std::move(a));
    const auto& m = s.symmetrized();
    const Cyclotomic24 want = i_power(-signature(m)) * Cyclotomic24(abs(det_exact(m)));
    EXPECT_EQ(alexander_at_minus1(s), want);
    // |V(-1)|^2 = det^2.
    EXPECT_EQ(want * want.conj(), Cyclotomic24(det_exact(m) * det_exact(m)));
  }
}
