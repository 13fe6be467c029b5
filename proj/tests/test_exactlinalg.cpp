#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "knotinv/exactlinalg.hpp"
#include "test_util.hpp"

using namespace knotinv;
using knotinv::testing::random_even_symmetric;
using knotinv::testing::random_symmetric;
using knotinv::testing::random_unimodular;

namespace {

const IntegerSymmetricMatrix k12n553{{-2, 0, -1, 0}, {0, -6, 9, 3}, {-1, 9, -8, -3}, {0, 3, -3, 0}};

// Cofactor expansion; fine for n <= 6.
Integer det_cofactor(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * det_cofactor(minor);
    d += (j % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

}  // namespace

TEST(DetExact, Examples) {
  EXPECT_EQ(det_exact(IntegerSymmetricMatrix{{-2, 1}, {1, -2}}), 3);
  EXPECT_EQ(det_exact(IntegerSymmetricMatrix{{0, 7}, {7, 0}}), -49);
  EXPECT_EQ(abs(det_exact(k12n553)), 81);
  EXPECT_EQ(det_exact(IntegerMatrix(0, 0)), 1);
}

TEST(DetExact, MatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_symmetric(rng, 1 + t % 6, 9);
    EXPECT_EQ(det_exact(m), det_cofactor(m.matrix()));
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(IntegerSymmetricMatrix{{-2, 1}, {1, -2}}), -2);
  EXPECT_EQ(signature(IntegerSymmetricMatrix{{0, 7}, {7, 0}}), 0);
  EXPECT_EQ(signature(IntegerSymmetricMatrix{{22, 17}, {17, 22}}), 2);
  EXPECT_EQ(signature(IntegerSymmetricMatrix::zero(3)), 0);
}

TEST(SmithCokernel, Examples) {
  const auto z = smith_cokernel(IntegerMatrix(2, 2));
  EXPECT_EQ(z.free_rank, 2U);
  EXPECT_FALSE(z.finite());

  const auto c = smith_cokernel(IntegerMatrix{{22, 17}, {17, 22}});
  EXPECT_TRUE(c.cyclic());
  EXPECT_EQ(c.order_or_zero, 195);

  const auto h = smith_cokernel(IntegerMatrix{{0, 7}, {7, 0}});
  EXPECT_FALSE(h.cyclic());
  EXPECT_EQ(h.exponents(7), (std::vector<unsigned>{1, 1}));

  EXPECT_EQ(smith_cokernel(k12n553.matrix()).exponents(3), (std::vector<unsigned>{0, 1, 1, 2}));
}

TEST(SmithCokernel, InvariantUnderUnimodularMoves) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto m = random_symmetric(rng, n, 6);
    const auto u = random_unimodular(rng, n), v = random_unimodular(rng, n);
    const auto a = smith_cokernel(m.matrix());
    const auto b = smith_cokernel(u.matrix() * m.matrix() * v.matrix());
    EXPECT_EQ(a.invariant_factors, b.invariant_factors);
    EXPECT_EQ(a.free_rank, b.free_rank);
  }
}

TEST(SmithNormalForm, FactorsReproduceInput) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_symmetric(rng, 1 + t % 5, 7).matrix();
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs(det_exact(s.left)), 1);
    EXPECT_EQ(abs(det_exact(s.right)), 1);
  }
}

TEST(ModPBlockReduce, HyperbolicSeven) {
  const auto r = mod_p_block_reduce(IntegerSymmetricMatrix{{0, 7}, {7, 0}}, 7);
  EXPECT_EQ(r.corank, 2U);
  EXPECT_EQ(r.block.size(), 0U);
  EXPECT_EQ(det_exact(r.block), 1);
}

TEST(ModPBlockReduce, TrefoilAtThree) {
  const IntegerSymmetricMatrix m{{-2, 1}, {1, -2}};
  const auto r = mod_p_block_reduce(m, 3);
  EXPECT_EQ(r.corank, 1U);
  ASSERT_EQ(r.block.size(), 1U);
  // -2 up to a square factor mod 3.
  EXPECT_EQ(legendre(r.block(0, 0), 3), legendre(-2, 3));
  EXPECT_EQ(r.transform.congruence(m), r.reduced);
}

TEST(ModPBlockReduce, CoprimeDeterminantKeepsFullSize) {
  const auto r = mod_p_block_reduce(IntegerSymmetricMatrix{{22, 17}, {17, 22}}, 7);
  EXPECT_EQ(r.corank, 0U);
  EXPECT_EQ(r.block.size(), 2U);
}

TEST(ModPBlockReduce, ShapeAndPathIndependence) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto m = random_even_symmetric(rng, n, 5);
    for (Integer p : {3, 5, 7, 11, 13}) {
      std::mt19937_64 r1(rng()), r2(rng());
      const auto a = mod_p_block_reduce(m, p, &r1);
      const auto b = mod_p_block_reduce(m, p, &r2);
      EXPECT_EQ(a.block.size() + a.corank, n);
      EXPECT_EQ(a.corank, corank_mod_p(m.matrix(), p));
      EXPECT_EQ(a.transform.congruence(m), a.reduced);
      EXPECT_NE(legendre(det_exact(a.block), p), 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i >= a.block.size() || j >= a.block.size()) {
            EXPECT_EQ(mod_floor(a.reduced(i, j), p), 0);
          }
      EXPECT_EQ(legendre(det_exact(a.block), p), legendre(det_exact(b.block), p));
    }
  }
}

TEST(RationalNormalize, Postconditions) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 27);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        r(i, j) = r(j, i) = x;
      }
    if (det_rational(r) == 0) continue;
    const long rho = -3;
    const auto out = rational_normalize(RationalSymmetricMatrix(r), 3, rho);
    const auto& np = out.normalized;
    EXPECT_EQ(out.transform.congruence(RationalSymmetricMatrix(r)), np);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) EXPECT_LE(ord_p(np(i, i), 3), ord_p(np(i - 1, i - 1), 3));
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_LT(ord_p(np(i, i), 3), ord_p(np(i, j), 3));
        EXPECT_GE(ord_p(np(i, j), 3), rho);
      }
    }
  }
}

TEST(InverseOrdNormalize, Postconditions) {
  std::mt19937_64 rng(15);
  for (Integer p : {3, 5, 7, 11, 13}) {
    int made = 0;
    while (made < 100) {
      const auto m = random_even_symmetric(rng, 2 + made % 4, 8);
      if (det_exact(m) == 0) continue;
      ++made;
      const auto nf = inverse_ord_normalize(m, p);
      EXPECT_EQ(nf.transform.congruence(m), nf.conjugate);
      EXPECT_EQ(nf.exponents, smith_cokernel(m.matrix()).exponents(p));
      const std::size_t n = m.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto v = ord_p(nf.conjugate_inverse(i, j), p);
          if (i == j) {
            EXPECT_EQ(v, -static_cast<long>(nf.exponents[i]));
          } else {
            EXPECT_GE(v, 0L);
          }
        }
    }
  }
}

TEST(InverseOrdNormalize, RejectsSingular) {
  EXPECT_THROW(inverse_ord_normalize(IntegerSymmetricMatrix::zero(2), 3), std::domain_error);
}

TEST(Jacobi, TrivialIndexSets) {
  const RationalSymmetricMatrix m{{2, 1, 0}, {1, 3, Rational(1, 2)}, {0, Rational(1, 2), -1}};
  const auto full = jacobi_minor_identity(m, {0, 1, 2}, {0, 1, 2});
  EXPECT_EQ(full.lhs, full.rhs);
  EXPECT_EQ(full.lhs, det_rational(m.matrix()));
  const auto none = jacobi_minor_identity(m, {}, {});
  EXPECT_EQ(none.lhs, 1);
  EXPECT_EQ(none.rhs, 1);
}

TEST(Jacobi, RandomFiveByFive) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int made = 0;
  while (made < 200) {
    RationalMatrix r(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i; j < 5; ++j) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        r(i, j) = r(j, i) = x;
      }
    if (det_rational(r) == 0) continue;
    ++made;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < 5; ++i) {
      if (rng() % 2) rows.push_back(i);
    }
    for (std::size_t i = 0; i < 5 && cols.size() < rows.size(); ++i) {
      if (rng() % 2 || 5 - i == rows.size() - cols.size()) cols.push_back(i);
    }
    const auto s = jacobi_minor_identity(RationalSymmetricMatrix(r), rows, cols);
    EXPECT_EQ(s.lhs, s.rhs);
  }
}

TEST(Jacobi, Rejects) {
  const RationalSymmetricMatrix m{{1, 0}, {0, 1}};
  EXPECT_THROW(jacobi_minor_identity(m, {0}, {}), std::invalid_argument);
  EXPECT_THROW(jacobi_minor_identity(RationalSymmetricMatrix{{0, 0}, {0, 0}}, {0}, {0}), std::domain_error);
}

TEST(MatrixText, RoundTrip) {
  const auto m = parse_square_matrix("2\n22 17\n17 22\n");
  EXPECT_EQ(m, (IntegerMatrix{{22, 17}, {17, 22}}));
  std::ostringstream out;
  write_matrix(out, m);
  EXPECT_EQ(parse_square_matrix(out.str()), m);
  EXPECT_THROW(parse_square_matrix("2\n1 2\n3\n"), std::runtime_error);
  std::istringstream asym("2\n0 1\n2 0\n");
  EXPECT_THROW(read_symmetric_matrix(asym), std::exception);
}
