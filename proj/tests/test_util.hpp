#pragma once

#include <random>

#include "knotinv/exactlinalg.hpp"

namespace knotinv::testing {

inline IntegerSymmetricMatrix random_even_symmetric(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2 * d(rng);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  }
  return IntegerSymmetricMatrix(std::move(m));
}

inline IntegerSymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return IntegerSymmetricMatrix(std::move(m));
}

// Product of random elementary shears and swaps.
inline UnimodularTransform random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix t = IntegerMatrix::identity(n);
  if (n == 0) return UnimodularTransform(t);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (std::size_t k = 0; k < 4 * n; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i != j) t.add_row(i, j, Integer(mult(rng)));
    if (k % 3 == 0) t.swap_rows(i, j);
  }
  if (rng() % 2)
    for (std::size_t j = 0; j < n; ++j) t(0, j) = -t(0, j);
  return UnimodularTransform(std::move(t));
}

}  // namespace knotinv::testing
