// Kauffman bracket state sum. Each state is a bit mask over crossings; the
// number of states with a given A-count and loop count is tallied in
// 64-bit counters, so the result does not depend on how states are split
// between threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

namespace {

struct Tally {
  std::size_t crossings;
  std::size_t max_loops;
  std::vector<std::uint64_t> counts;  // [a * (max_loops + 1) + loops]

  Tally(std::size_t n, std::size_t ml) : crossings(n), max_loops(ml), counts((n + 1) * (ml + 1), 0) {}
  void add(std::size_t a, std::size_t loops) { ++counts[a * (max_loops + 1) + loops]; }
};

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void tally_range(const LinkDiagram& d, std::uint64_t lo, std::uint64_t hi, Tally& out) {
  const int n = static_cast<int>(d.size());
  const int darts = 4 * n;
  std::vector<int> parent(darts);
  for (std::uint64_t state = lo; state < hi; ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int sets = darts;
    auto unite = [&](int x, int y) {
      x = find(parent, x);
      y = find(parent, y);
      if (x != y) {
        parent[x] = y;
        --sets;
      }
    };
    for (int x = 0; x < darts; ++x)
      if (x < d.partner(x)) unite(x, d.partner(x));
    std::size_t a = 0;
    for (int c = 0; c < n; ++c) {
      const int b = 4 * c;
      if (state >> c & 1) {
        // A-smoothing joins the incoming under-strand to the slot after it.
        ++a;
        unite(b, b + 1);
        unite(b + 2, b + 3);
      } else {
        unite(b, b + 3);
        unite(b + 1, b + 2);
      }
    }
    out.add(a, static_cast<std::size_t>(sets));
  }
}

}  // namespace

LaurentPolynomial jones_via_bracket(const LinkDiagram& d, std::size_t budget, unsigned threads) {
  const std::size_t n = d.size();
  if (n > budget)
    throw std::length_error("jones_via_bracket: " + std::to_string(n) + " crossings exceed budget " +
                            std::to_string(budget));
  if (n > 62) throw std::length_error("jones_via_bracket: too many crossings for a state sum");
  const std::size_t max_loops = 2 * n + 1;
  Tally total(n, max_loops);
  if (n == 0) {
    total.add(0, 0);
  } else {
    const std::uint64_t states = std::uint64_t{1} << n;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t blocks = std::min<std::uint64_t>(states, 256);
    if (states < 4096) threads = 1;
    std::atomic<std::uint64_t> next{0};
    std::vector<Tally> parts(threads, Tally(n, max_loops));
    auto work = [&](unsigned id) {
      for (std::uint64_t blk; (blk = next++) < blocks;)
        tally_range(d, states * blk / blocks, states * (blk + 1) / blocks, parts[id]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();
    for (const auto& p : parts)
      for (std::size_t k = 0; k < total.counts.size(); ++k) total.counts[k] += p.counts[k];
  }

  // <D> = sum A^{a-b} (-A^2 - A^-2)^{loops-1}, exponents in A.
  const LaurentPolynomial loop_factor = LaurentPolynomial::monomial(2, -1) + LaurentPolynomial::monomial(-2, -1);
  std::vector<LaurentPolynomial> loop_pow{LaurentPolynomial(1)};
  LaurentPolynomial bracket;
  const std::size_t free = d.free_loops();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t l = 0; l <= max_loops; ++l) {
      const std::uint64_t cnt = total.counts[a * (max_loops + 1) + l];
      if (cnt == 0) continue;
      const std::size_t loops = l + free;
      while (loop_pow.size() < loops) loop_pow.push_back(loop_pow.back() * loop_factor);
      const long e = static_cast<long>(a) - static_cast<long>(n - a);
      bracket += LaurentPolynomial::monomial(e, Integer(static_cast<unsigned long>(cnt))) * loop_pow[loops - 1];
    }

  // V = (-A^3)^{-w} <D> with A = t^{-1/4}.
  const long w = d.writhe();
  const LaurentPolynomial norm = LaurentPolynomial::monomial(-3 * w, w % 2 ? -1 : 1);
  const LaurentPolynomial in_a = norm * bracket;
  LaurentPolynomial v;
  for (const auto& [e, c] : in_a.terms()) {
    if (e % 2 != 0) throw std::logic_error("jones_via_bracket: odd power of A survived normalization");
    v.add_term(-e / 2, c);
  }
  return v;
}

}  // namespace knotinv
