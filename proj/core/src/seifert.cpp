#include "knotinv/seifert.hpp"

#include <stdexcept>

namespace knotinv {

namespace {

void require_even_diagonal(const IntegerSymmetricMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (mpz_odd_p(m(i, i).get_mpz_t()))
      throw std::invalid_argument("expected an even diagonal, entry " + std::to_string(i) + " is " + m(i, i).get_str());
}

IntegerSymmetricMatrix symmetrize(const IntegerMatrix& a) {
  if (!a.square()) throw std::invalid_argument("Seifert matrix must be square");
  return IntegerSymmetricMatrix(a + a.transpose());
}

// legendre((-1)^e * det N, p) with N the nondegenerate block mod p.
Sign singular_determinant(const IntegerSymmetricMatrix& m, const Integer& p, long exponent_without_dp,
                          std::mt19937_64* rng) {
  ModPReduction red = mod_p_block_reduce(m, p, rng);
  Integer det_n = det_exact(red.block);
  const long e = static_cast<long>(red.corank) + exponent_without_dp;
  if (e % 2 != 0) det_n = -det_n;
  return legendre_sign(det_n, p);
}

}  // namespace

SeifertData::SeifertData(IntegerMatrix a) : a_(std::move(a)), m_(symmetrize(a_)) {}

SpanningSurfaceData::SpanningSurfaceData(IntegerSymmetricMatrix r_, long mu_) : r(std::move(r_)), mu(mu_) {
  if (mu < 1) throw std::invalid_argument("spanning surface: mu must be positive");
}

long mu_of(const IntegerSymmetricMatrix& m) {
  require_even_diagonal(m);
  return static_cast<long>(corank_mod_p(m.matrix(), Integer(2))) + 1;
}

Sign delta_p(const IntegerSymmetricMatrix& m, const Integer& p, std::mt19937_64* rng) {
  require_odd_prime(p);
  const long mu = mu_of(m);
  const long n = static_cast<long>(m.size());
  if ((n + mu - 1) % 2 != 0) throw std::logic_error("delta_p: n + mu - 1 is odd");
  return singular_determinant(m, p, (n + mu - 1) / 2, rng);
}

unsigned oddity(const IntegerSymmetricMatrix& r) {
  // v is characteristic iff w^T R w = v^T R w mod 2 for all w, i.e.
  // R v = diag(R) mod 2; solve that system over F_2.
  const std::size_t n = r.size();
  std::vector<std::vector<char>> a(n, std::vector<char>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpz_odd_p(r(i, j).get_mpz_t()) ? 1 : 0;
    a[i][n] = a[i][i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && !a[piv][col]) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && a[i][col])
        for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[row][j];
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][n]) throw std::logic_error("oddity: diagonal not in the image of R mod 2");
  std::vector<Integer> v(n, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = a[i][n];
  Integer acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != 0)
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0) acc += r(i, j);
  return static_cast<unsigned>(mod_floor(acc, Integer(8)).get_ui());
}

Sign delta_p_gl(const SpanningSurfaceData& s, const Integer& p, std::mt19937_64* rng) {
  require_odd_prime(p);
  const long n = static_cast<long>(s.r.size());
  const long t = n + s.mu - 1 - static_cast<long>(oddity(s.r));
  if (t % 2 != 0) throw std::invalid_argument("delta_p_gl: n + mu - 1 - o(R) is odd");
  return singular_determinant(s.r, p, t / 2, rng);
}

Sign arf_sign_from_det(const Integer& det) {
  Integer r = mod_floor(det, Integer(8));
  if (mpz_even_p(r.get_mpz_t())) throw std::invalid_argument("Arf invariant needs an odd determinant");
  return (r == 1 || r == 7) ? Sign{} : -Sign{};
}

std::optional<Sign> arf_sign(const SeifertData& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> am(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) am[i][j] = mpz_odd_p(a.seifert()(i, j).get_mpz_t()) ? 1 : 0;
  using Vec = std::vector<int>;
  auto q = [&](const Vec& x) {
    int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s ^= x[i] & am[i][j] & x[j];
    return s;
  };
  auto b = [&](const Vec& x, const Vec& y) {
    int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s ^= x[i] & (am[i][j] ^ am[j][i]) & y[j];
    return s;
  };
  // Symplectic reduction: split off hyperbolic pairs (e, f); whatever is
  // left orthogonal to everything is the radical.
  std::vector<Vec> rest;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    rest.push_back(std::move(e));
  }
  int arf = 0;
  while (!rest.empty()) {
    Vec e = std::move(rest.back());
    rest.pop_back();
    std::size_t k = 0;
    while (k < rest.size() && b(e, rest[k]) == 0) ++k;
    if (k == rest.size()) {
      if (q(e)) return std::nullopt;
      continue;
    }
    Vec f = std::move(rest[k]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    arf ^= q(e) & q(f);
    for (Vec& v : rest) {
      const int be = b(v, e), bf = b(v, f);
      for (std::size_t i = 0; i < n; ++i) v[i] ^= (bf & e[i]) ^ (be & f[i]);
    }
  }
  return arf ? -Sign{} : Sign{};
}

LinkInvariantBundle classical_invariants(const IntegerSymmetricMatrix& m, const std::vector<Integer>& primes) {
  LinkInvariantBundle b;
  b.components = mu_of(m);
  b.det = abs(det_exact(m));
  b.sigma = signature(m);
  for (const auto& p : primes) {
    b.d_p[p] = d_p(m, p);
    b.delta_p[p] = delta_p(m, p);
  }
  if (b.components == 1) b.arf_sign = arf_sign_from_det(b.det);
  return b;
}

LinkInvariantBundle classical_invariants(const SeifertData& a, const std::vector<Integer>& primes) {
  LinkInvariantBundle b = classical_invariants(a.symmetrized(), primes);
  b.arf_sign = arf_sign(a);
  return b;
}

IntegerSymmetricMatrix stabilize(const IntegerSymmetricMatrix& m) {
  return block_sum(m, IntegerSymmetricMatrix{{0, 1}, {1, 0}});
}

std::pair<IntegerSymmetricMatrix, IntegerSymmetricMatrix> crossing_change_pair(const IntegerSymmetricMatrix& p,
                                                                               const Integer& a,
                                                                               CrossingChangeCase which) {
  require_even_diagonal(p);
  if (mpz_even_p(a.get_mpz_t())) throw std::invalid_argument("crossing_change_pair: a must be odd");
  auto build = [&](const Integer& last) {
    if (which == CrossingChangeCase::Diagonal) return block_sum(p, IntegerSymmetricMatrix{{last}});
    return block_sum(p, IntegerSymmetricMatrix{{0, 1}, {1, last}});
  };
  return {build(a - 1), build(a + 1)};
}

}  // namespace knotinv
