#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "knotinv/numtheory.hpp"

using namespace knotinv;

namespace {

// Euler's criterion by repeated multiplication, independent of GMP's symbol.
int euler_criterion(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1;
  for (long e = 0; e < (p - 1) / 2; ++e) r = r * a % p;
  return r == 1 ? 1 : -1;
}

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(0, 3), 0);
  EXPECT_EQ(legendre(-1, 7), -1);
}

TEST(Legendre, MatchesEulerCriterion) {
  for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 101})
    for (long a = -60; a <= 60; ++a) EXPECT_EQ(legendre(a, p), euler_criterion(a, p)) << a << " mod " << p;
}

TEST(Legendre, Multiplicative) {
  for (long p : {3, 5, 7, 11, 13})
    for (long a = -20; a <= 20; ++a)
      for (long b = -20; b <= 20; ++b) EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
}

TEST(Legendre, RejectsNonPrimeModulus) {
  EXPECT_THROW(legendre(1, 9), std::invalid_argument);
  EXPECT_THROW(legendre(1, 2), std::invalid_argument);
  EXPECT_THROW(legendre_sign(3, 3), std::domain_error);
}

TEST(OrdP, Examples) {
  EXPECT_EQ(ord_p(Integer(9), 3), 2L);
  EXPECT_EQ(ord_p(Rational(2, 9), 3), -2L);
  EXPECT_TRUE(ord_p(Integer(0), 5).is_infinite());
  EXPECT_EQ(ord_p(Rational(5, 7), 7), -1L);
  EXPECT_EQ(ord_p(Integer(-250), 5), 3L);
}

TEST(OrdP, ValuationOfProductIsSum) {
  for (long a = -30; a <= 30; ++a)
    for (long b = 1; b <= 30; ++b) {
      Rational x(a, b), y(b * b, a == 0 ? 1 : a);
      x.canonicalize();
      y.canonicalize();
      EXPECT_EQ(ord_p(Rational(x * y), 3), ord_p(x, 3) + ord_p(y, 3));
    }
}

TEST(OrdP, InfinityOrdersAboveEverything) {
  EXPECT_GT(PAdicValuation::infinity(), PAdicValuation::finite(1000));
  EXPECT_THROW(PAdicValuation::infinity().value(), std::logic_error);
}

TEST(Nu, Examples) {
  EXPECT_EQ(nu(1), Sign{});
  EXPECT_EQ(nu(5), -Sign{});
  EXPECT_EQ(nu(13), Sign{});
  EXPECT_EQ(nu(11), Sign{});
  EXPECT_EQ(nu(7), -Sign{});
  EXPECT_EQ(nu(-1), Sign{});
  EXPECT_THROW(nu(9), std::invalid_argument);
}

TEST(IsQrMod, Examples) {
  EXPECT_TRUE(is_qr_mod(4, 9));
  EXPECT_FALSE(is_qr_mod(2, 9));
  EXPECT_TRUE(is_qr_mod(1, 1));
}

TEST(IsQrMod, MatchesBruteForce) {
  for (long q = 1; q <= 99; q += 2)
    for (long a = -q; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      bool square = false;
      for (long x = 0; x < q && !square; ++x) square = ((x * x - a) % q + q) % q == 0;
      EXPECT_EQ(is_qr_mod(a, q), square) << a << " mod " << q;
    }
}

TEST(SplitPrimePower, Examples) {
  EXPECT_EQ(split_prime_power(195, 3), std::make_pair(1U, Integer(65)));
  EXPECT_EQ(split_prime_power(-81, 3), std::make_pair(4U, Integer(1)));
  EXPECT_EQ(split_prime_power(14739, 17), std::make_pair(3U, Integer(3)));
}

TEST(Factorize, Small) {
  const auto f = factorize(195);
  ASSERT_EQ(f.size(), 3U);
  EXPECT_EQ(f[0].first, 3);
  EXPECT_EQ(f[2].first, 13);
  EXPECT_EQ(prime_divisors(-49), std::vector<Integer>{7});
  EXPECT_TRUE(prime_divisors(1).empty());
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(LeastNonresidue, Small) {
  EXPECT_EQ(least_nonresidue(3), 2);
  EXPECT_EQ(least_nonresidue(7), 3);
  EXPECT_EQ(least_nonresidue(17), 3);
  EXPECT_EQ(least_nonresidue(71), 7);
}

TEST(ModArithmetic, FloorAndInverse) {
  EXPECT_EQ(mod_floor(-7, 5), 3);
  EXPECT_EQ(inverse_mod(3, 7), 5);
  EXPECT_THROW(inverse_mod(3, 9), std::domain_error);
}
