#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "knotinv/linkform.hpp"
#include "knotinv/seifert.hpp"
#include "test_util.hpp"

using namespace knotinv;
using knotinv::testing::random_even_symmetric;
using knotinv::testing::random_symmetric;
using knotinv::testing::random_unimodular;

namespace {

WallSummand A(long p, unsigned k) { return {p, k, WallType::A}; }
WallSummand B(long p, unsigned k) { return {p, k, WallType::B}; }

std::vector<Integer> column(const IntegerMatrix& m, std::size_t j) {
  std::vector<Integer> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

// Odd-determinant symmetric matrix (diagonal not necessarily even).
IntegerSymmetricMatrix random_odd_det(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto m = random_symmetric(rng, n, 5);
    const Integer d = det_exact(m);
    if (d != 0 && mpz_odd_p(d.get_mpz_t())) return m;
  }
}

}  // namespace

TEST(EvalForm, OneByOne) {
  const LinkingFormPresentation f(IntegerSymmetricMatrix{{3}});
  EXPECT_EQ(eval_form(f, {1}, {1}), Rational(1, 3));
  EXPECT_EQ(eval_form(f, {3}, {1}), 0);
  EXPECT_EQ(eval_form(f, {2}, {2}), Rational(1, 3));
}

TEST(EvalForm, ImageOfMIsRadical) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto m = random_odd_det(rng, n);
    const LinkingFormPresentation f(m);
    std::vector<Integer> x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e(rng), y[i] = e(rng), z[i] = e(rng);
    std::vector<Integer> mz(n, 0), xs = x;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mz[i] += m(i, j) * z[j];
      xs[i] += mz[i];
    }
    EXPECT_EQ(eval_form(f, mz, y), 0);
    EXPECT_EQ(eval_form(f, xs, y), eval_form(f, x, y));
    EXPECT_EQ(eval_form(f, x, y), eval_form(f, y, x));
    const Rational v = eval_form(f, x, y);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, 1);
  }
}

TEST(EvalForm, GeneratorOfCyclicCokernel) {
  const IntegerMatrix m{{22, 17}, {17, 22}};
  const LinkingFormPresentation f{IntegerSymmetricMatrix(m)};
  const auto s = smith_normal_form(m);
  // U M V = D, so coker M = coker D via U; the last column of U^{-1} generates.
  const auto uinv = UnimodularTransform(s.left).inverse().matrix();
  const auto h = column(uinv, 1);
  const Rational v = eval_form(f, h, h);
  EXPECT_EQ(v.get_den(), 195);
  EXPECT_EQ(std::gcd(v.get_num().get_si(), 195L), 1);
}

TEST(EvalForm, RejectsSizeMismatch) {
  const LinkingFormPresentation f(IntegerSymmetricMatrix{{3}});
  EXPECT_THROW(eval_form(f, {1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(LinkingFormPresentation(IntegerSymmetricMatrix::zero(2)), std::domain_error);
}

TEST(WallDecompose, OneByOneThree) {
  const auto w = wall_decompose(LinkingFormPresentation(IntegerSymmetricMatrix{{3}}));
  EXPECT_EQ(w, WallDecomposition({A(3, 1)}));
}

TEST(WallDecompose, TwelveN553) {
  const IntegerSymmetricMatrix m{{-2, 0, -1, 0}, {0, -6, 9, 3}, {-1, 9, -8, -3}, {0, 3, -3, 0}};
  const auto w = wall_decompose(LinkingFormPresentation(m));
  std::vector<unsigned> ks;
  for (const auto& s : w.summands()) {
    EXPECT_EQ(s.p, 3);
    ks.push_back(s.k);
  }
  EXPECT_EQ(ks, (std::vector<unsigned>{1, 1, 2}));
  // The B-summand count must reproduce delta_3 from the reduction route.
  const Integer det = det_exact(m);
  EXPECT_EQ(delta_p_from_linking_form(w, det, d_p(m, 3), 3), delta_p(m, 3));
}

TEST(WallDecompose, BlockSumIsUnion) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_odd_det(rng, 1 + t % 3);
    const auto b = random_odd_det(rng, 1 + t % 2);
    const auto wa = wall_decompose(LinkingFormPresentation(a));
    const auto wb = wall_decompose(LinkingFormPresentation(b));
    const auto wab = wall_decompose(LinkingFormPresentation(block_sum(a, b)));
    EXPECT_EQ(wab, wa + wb);
    for (const auto& s : wab.summands())
      EXPECT_EQ(wab.r(s.p, s.k), (wa.r(s.p, s.k) + wb.r(s.p, s.k)) % 2);
  }
}

TEST(WallDecompose, IsometryInvariant) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto m = random_odd_det(rng, n);
    const auto w = wall_decompose(LinkingFormPresentation(m));
    const auto w2 = wall_decompose(LinkingFormPresentation(random_unimodular(rng, n).congruence(m)));
    EXPECT_EQ(w, w2);
  }
}

TEST(WallDecompose, OrderMatchesDeterminant) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 500; ++t) {
    const auto m = random_odd_det(rng, 1 + t % 6);
    EXPECT_EQ(wall_decompose(LinkingFormPresentation(m)).order(), abs(det_exact(m)));
  }
}

TEST(WallDecompose, RejectsEvenDeterminant) {
  EXPECT_THROW(wall_decompose(LinkingFormPresentation(IntegerSymmetricMatrix{{2}})), std::domain_error);
}

TEST(Rpk, Examples) {
  EXPECT_EQ(r_pk(WallDecomposition{}, 3, 1), 0U);
  EXPECT_EQ(r_pk(WallDecomposition({A(3, 1), A(3, 1)}), 3, 1), 0U);
  EXPECT_EQ(r_pk(WallDecomposition({A(3, 1), A(3, 1)}), 3, 1), r_pk(WallDecomposition({B(3, 1), B(3, 1)}), 3, 1));
  const WallDecomposition w({A(3, 1), B(3, 2)});
  EXPECT_EQ(r_pk(w, 3, 1), 1U);
  EXPECT_EQ(r_pk(w, 3, 2), 0U);
}

TEST(WallDecomposition, CanonicalFormKeepsAtMostOneB) {
  const WallDecomposition w({B(5, 1), B(5, 1), B(5, 1)});
  EXPECT_EQ(w, WallDecomposition({A(5, 1), A(5, 1), B(5, 1)}));
}

TEST(Isometric, Examples) {
  const WallDecomposition w({A(3, 1), B(5, 2)});
  EXPECT_TRUE(isometric(w, w));
  EXPECT_TRUE(isometric(WallDecomposition({A(7, 1), A(7, 1)}), WallDecomposition({B(7, 1), B(7, 1)})));
  EXPECT_FALSE(isometric(WallDecomposition({A(7, 1)}), WallDecomposition({B(7, 1)})));
  EXPECT_FALSE(isometric(WallDecomposition({A(7, 1)}), WallDecomposition({A(7, 2)})));
}

TEST(WallDecomposition, SerializeRoundTrip) {
  const WallDecomposition w({B(13, 1), A(3, 2), B(3, 1)});
  EXPECT_EQ(w.serialize(), "3 1 B\n3 2 A\n13 1 B\n");
  EXPECT_EQ(WallDecomposition::parse(w.serialize()), w);
  EXPECT_THROW(WallDecomposition::parse("3 1 C\n"), std::runtime_error);
}

TEST(WallDecompose, TypesMatchBruteForceSquares) {
  // M = (p u): lambda(1, 1) = 1/(p u), so the summand is A iff u is a square mod p.
  for (long p : {3, 5, 7, 11, 13})
    for (long u = -12; u <= 12; ++u) {
      if (u % p == 0 || u % 2 == 0) continue;
      bool square = false;
      for (long x = 1; x < p; ++x) square = square || ((x * x - u) % p + p) % p == 0;
      const auto w = wall_decompose(LinkingFormPresentation(IntegerSymmetricMatrix{{p * u}}));
      const auto it = std::find_if(w.summands().begin(), w.summands().end(),
                                   [&](const WallSummand& s) { return s.p == p; });
      ASSERT_NE(it, w.summands().end());
      EXPECT_EQ(it->type, square ? WallType::A : WallType::B) << p << " * " << u;
    }
}
