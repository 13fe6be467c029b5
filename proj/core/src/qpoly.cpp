// Q polynomial by the unoriented skein relation
//
//   Q(L+) + Q(L-) = z (Q(L0) + Q(Linf)),  Q(unknot) = 1,
//   Q(L u O) = mu Q(L) with mu = 2/z - 1.
//
// A connected diagram is made descending by switching its "bad" crossings
// x_1..x_k one at a time; telescoping the skein relation gives
//
//   Q(D) = (-1)^k mu^{c-1} + z sum_j (-1)^{j-1} (Q(A_j) + Q(B_j)),
//
// where A_j, B_j are the two smoothings at x_j of D with x_1..x_{j-1}
// switched. Diagrams are simplified by RI and RII moves, split into connected
// pieces and memoized on a canonical encoding that ignores relabelling,
// planar reflection and switching every crossing (Q is mirror invariant).

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

namespace {

// Unoriented slot graph: slots 0 and 2 of a crossing are the under-strand.
struct Slots {
  std::vector<int> nbr;
  int loops = 0;

  int crossings() const { return static_cast<int>(nbr.size() / 4); }
};

int dart(int c, int s) { return 4 * c + (s & 3); }

// Removes crossing c, joining its slots in the pairs given by join[s], and
// moves the last crossing into c's place.
Slots remove_crossing(const Slots& d, int c, const std::array<int, 4>& join) {
  Slots out = d;
  const int base = 4 * c;
  auto inside = [&](int x) { return x / 4 == c; };
  std::array<bool, 4> used{};
  for (int s = 0; s < 4; ++s) {
    const int e = d.nbr[base + s];
    if (inside(e)) continue;
    int cur = s;
    int end = -1;
    for (int guard = 0; guard < 8; ++guard) {
      used[cur] = true;
      const int j = join[cur];
      used[j] = true;
      const int p = d.nbr[base + j];
      if (!inside(p)) {
        end = p;
        break;
      }
      cur = p % 4;
    }
    if (end < 0) throw std::logic_error("remove_crossing: walk did not terminate");
    out.nbr[e] = end;
    out.nbr[end] = e;
  }
  // Slots not reached from outside form closed loops.
  for (int s = 0; s < 4; ++s) {
    if (used[s]) continue;
    int cur = s;
    while (!used[cur]) {
      used[cur] = true;
      const int j = join[cur];
      used[j] = true;
      cur = d.nbr[base + j] % 4;
    }
    ++out.loops;
  }
  const int last = d.crossings() - 1;
  if (c != last) {
    for (int s = 0; s < 4; ++s) {
      const int from = 4 * last + s, to = base + s;
      int p = out.nbr[from];
      if (p / 4 == last) p = base + p % 4;
      out.nbr[to] = p;
      if (p / 4 != c) out.nbr[p] = to;
    }
  }
  out.nbr.resize(4 * static_cast<std::size_t>(last));
  return out;
}

constexpr std::array<int, 4> kStraight{2, 3, 0, 1};
constexpr std::array<int, 4> kSmoothA{1, 0, 3, 2};
constexpr std::array<int, 4> kSmoothB{3, 2, 1, 0};

Slots switch_crossing(const Slots& d, int c) {
  // New slot j is old slot j + 1, so the old over-strand now occupies 0, 2.
  Slots out = d;
  auto map = [&](int x) { return x / 4 == c ? dart(c, x % 4 + 3) : x; };
  for (int s = 0; s < 4; ++s) {
    const int old = 4 * c + s;
    const int nd = map(old);
    const int p = map(d.nbr[old]);
    out.nbr[nd] = p;
    out.nbr[p] = nd;
  }
  return out;
}

bool simplify_once(Slots& d) {
  const int n = d.crossings();
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      if (d.nbr[dart(c, s)] == dart(c, s + 1)) {
        d = remove_crossing(d, c, kStraight);
        return true;
      }
  // Bigon with one strand over at both corners.
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const int p = d.nbr[dart(c, s)];
      const int c2 = p / 4, t = p % 4;
      if (c2 == c) continue;
      if (d.nbr[dart(c2, t + 3)] != dart(c, s + 1)) continue;
      if ((s & 1) != (t & 1)) continue;
      Slots r = remove_crossing(d, c, kStraight);
      d = remove_crossing(r, c2 == r.crossings() ? c : c2, kStraight);
      return true;
    }
  return false;
}

std::vector<Slots> split(const Slots& d) {
  const int n = d.crossings();
  std::vector<int> piece(n, -1);
  std::vector<Slots> out;
  for (int start = 0; start < n; ++start) {
    if (piece[start] >= 0) continue;
    std::vector<int> members{start};
    piece[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        const int o = d.nbr[dart(members[i], s)] / 4;
        if (piece[o] < 0) {
          piece[o] = piece[start];
          members.push_back(o);
        }
      }
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    Slots p;
    p.nbr.resize(4 * members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        const int q = d.nbr[dart(members[i], s)];
        p.nbr[4 * i + s] = dart(local[q / 4], q % 4);
      }
    out.push_back(std::move(p));
  }
  return out;
}

// Canonical key of a connected diagram with at least one crossing.
std::string canonical_key(const Slots& d) {
  const int n = d.crossings();
  std::string best;
  std::vector<int> idx(n), base(n), order;
  std::string code;
  for (int d0 = 0; d0 < 4 * n; ++d0)
    for (int dir : {1, -1}) {
      std::fill(idx.begin(), idx.end(), -1);
      order.assign(1, d0 / 4);
      idx[d0 / 4] = 0;
      base[d0 / 4] = d0 % 4;
      code.clear();
      const int flip = d0 % 2;  // make the first crossing's local slot 0 an under-slot
      bool worse = false;
      for (std::size_t i = 0; i < order.size() && !worse; ++i) {
        const int c = order[i];
        code.push_back(static_cast<char>(((base[c] & 1) ^ flip) + 'a'));
        for (int k = 0; k < 4; ++k) {
          const int p = d.nbr[dart(c, base[c] + dir * k + 4)];
          const int pc = p / 4;
          if (idx[pc] < 0) {
            idx[pc] = static_cast<int>(order.size());
            base[pc] = p % 4;
            order.push_back(pc);
          }
          const int v = 4 * idx[pc] + ((p % 4 - base[pc]) * dir + 8) % 4;
          code.push_back(static_cast<char>(v & 0xff));
          code.push_back(static_cast<char>(v >> 8));
        }
        // Abandon as soon as the prefix already exceeds the best code.
        worse = !best.empty() && code.compare(0, code.size(), best, 0, code.size()) > 0;
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  return best;
}

struct Visit {
  int crossing;
  bool over;
};

// Link components as cyclic visit sequences.
std::vector<std::vector<Visit>> strands(const Slots& d) {
  const int darts = static_cast<int>(d.nbr.size());
  std::vector<char> seen(darts, 0);
  std::vector<std::vector<Visit>> out;
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<Visit> comp;
    int e = start;
    do {
      seen[e] = seen[dart(e / 4, e % 4 + 2)] = 1;
      comp.push_back({e / 4, (e % 4) % 2 == 1});
      e = d.nbr[dart(e / 4, e % 4 + 2)];
    } while (e != start);
    out.push_back(std::move(comp));
  }
  return out;
}

// Bad crossings of the best descending or ascending traversal, in order of
// first visit.
std::vector<int> bad_crossings(const Slots& d, std::size_t& components) {
  const auto comps = strands(d);
  components = comps.size();
  const int n = d.crossings();
  std::vector<int> best;
  bool have = false;
  for (bool descending : {true, false}) {
    // Per component: best base point and direction for its self-crossings.
    std::vector<std::vector<Visit>> tours;
    for (const auto& comp : comps) {
      const int len = static_cast<int>(comp.size());
      std::vector<Visit> pick;
      int pick_bad = -1;
      for (int dir : {1, -1})
        for (int st = 0; st < len; ++st) {
          std::vector<Visit> tour;
          for (int k = 0; k < len; ++k) tour.push_back(comp[((st + dir * k) % len + len) % len]);
          std::vector<char> met(n, 0);
          int bad = 0;
          for (const auto& v : tour) {
            if (met[v.crossing]) continue;
            met[v.crossing] = 1;
            if (v.over != descending) ++bad;
          }
          if (pick_bad < 0 || bad < pick_bad) {
            pick_bad = bad;
            pick = tour;
          }
        }
      tours.push_back(std::move(pick));
    }
    std::vector<int> perm(tours.size());
    std::iota(perm.begin(), perm.end(), 0);
    const bool permute = tours.size() <= 6;
    do {
      std::vector<char> met(n, 0);
      std::vector<int> bad;
      for (int ci : perm)
        for (const auto& v : tours[ci]) {
          if (met[v.crossing]) continue;
          met[v.crossing] = 1;
          if (v.over != descending) bad.push_back(v.crossing);
        }
      if (!have || bad.size() < best.size()) {
        best = std::move(bad);
        have = true;
      }
    } while (permute && std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

class QSkein {
 public:
  QSkein() : mu_(LaurentPolynomial::monomial(-1, 2) - LaurentPolynomial(1)), z_(LaurentPolynomial::monomial(1)) {}

  LaurentPolynomial eval(Slots d) {
    while (simplify_once(d)) {
    }
    LaurentPolynomial q(1);
    int pieces = d.loops;
    for (const auto& p : split(d)) {
      q *= connected(p);
      ++pieces;
    }
    for (int i = 1; i < pieces; ++i) q *= mu_;
    return q;
  }

 private:
  LaurentPolynomial connected(const Slots& d) {
    const std::string key = canonical_key(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t comps = 0;
    const std::vector<int> bad = bad_crossings(d, comps);
    LaurentPolynomial q = mu_pow(comps - 1);
    if (bad.size() % 2) q = -q;
    // Switching keeps crossing indices, so x_j stays addressable.
    Slots cur = d;
    LaurentPolynomial sum;
    for (std::size_t j = 0; j < bad.size(); ++j) {
      const int x = bad[j];
      LaurentPolynomial term = eval(remove_crossing(cur, x, kSmoothA)) + eval(remove_crossing(cur, x, kSmoothB));
      if (j % 2) term = -term;
      sum += term;
      cur = switch_crossing(cur, x);
    }
    q += z_ * sum;
    memo_.emplace(key, q);
    return q;
  }

  LaurentPolynomial mu_pow(std::size_t k) const {
    LaurentPolynomial r(1);
    for (std::size_t i = 0; i < k; ++i) r *= mu_;
    return r;
  }

  LaurentPolynomial mu_, z_;
  std::unordered_map<std::string, LaurentPolynomial> memo_;
};

}  // namespace

LaurentPolynomial q_via_skein(const LinkDiagram& d, std::size_t budget) {
  if (d.size() > budget)
    throw std::length_error("q_via_skein: " + std::to_string(d.size()) + " crossings exceed budget " +
                            std::to_string(budget));
  Slots s;
  s.nbr.resize(4 * d.size());
  for (int x = 0; x < static_cast<int>(s.nbr.size()); ++x) s.nbr[x] = d.partner(x);
  s.loops = static_cast<int>(d.free_loops());
  QSkein q;
  return q.eval(std::move(s));
}

}  // namespace knotinv
