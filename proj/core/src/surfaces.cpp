// Spanning surfaces of diagrams: Seifert matrices through braid form and
// Goeritz matrices of checkerboard colorings.
//
// A diagram is brought into braid form by Vogel moves: while some face has
// two boundary edges on different Seifert circles with the face on the same
// side of both, push one of them across the other (a Reidemeister II move).
// The Seifert circles of the result are coherently nested; numbering them
// along the nesting and reading crossings in angular order from a ray gives
// a braid word. The Seifert matrix of the closed braid's canonical surface
// is then written down band by band, as in Collins' construction.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "knotinv/diagram.hpp"

namespace knotinv {

namespace {

// Oriented slot graph. Slot 0 is the incoming under-strand, slot 2 the
// outgoing one; a positive crossing has the over-strand entering at slot 3.
struct Oriented {
  std::vector<int> nbr;
  std::vector<bool> pos;

  int crossings() const { return static_cast<int>(pos.size()); }
  bool outgoing(int d) const {
    const int s = d % 4;
    return s == 2 || (s == 1 && pos[d / 4]) || (s == 3 && !pos[d / 4]);
  }
  // Outgoing end of the edge at dart d.
  int edge(int d) const { return outgoing(d) ? d : nbr[d]; }
  // Seifert smoothing: incoming dart to the outgoing dart it is joined to.
  int smooth(int in) const {
    const int c = in / 4, s = in % 4;
    if (pos[c]) return 4 * c + (s == 0 ? 1 : 2);
    return 4 * c + (s == 0 ? 3 : 2);
  }
  void link(int a, int b) {
    nbr[a] = b;
    nbr[b] = a;
  }
};

int cw(int d) { return (d & ~3) | ((d + 3) & 3); }

// Faces as cycles of d -> cw(nbr[d]); the face of d lies to the left of the
// edge traversed from d, i.e. in the corner between slots s and s + 1.
std::vector<int> faces(const std::vector<int>& nbr, int& count) {
  std::vector<int> face(nbr.size(), -1);
  count = 0;
  for (std::size_t d0 = 0; d0 < nbr.size(); ++d0) {
    if (face[d0] >= 0) continue;
    for (int d = static_cast<int>(d0); face[d] < 0; d = cw(nbr[d])) face[d] = count;
    ++count;
  }
  return face;
}

// Seifert circle of every outgoing dart (edge); -1 for incoming darts.
std::vector<int> circles(const Oriented& g, int& count) {
  std::vector<int> circ(g.nbr.size(), -1);
  count = 0;
  for (std::size_t u0 = 0; u0 < g.nbr.size(); ++u0) {
    if (!g.outgoing(static_cast<int>(u0)) || circ[u0] >= 0) continue;
    for (int u = static_cast<int>(u0); circ[u] < 0; u = g.smooth(g.nbr[u])) circ[u] = count;
    ++count;
  }
  return circ;
}

// One Vogel move if some face admits one; returns false for braided diagrams.
bool vogel_move(Oriented& g) {
  int nf = 0, nc = 0;
  const std::vector<int> face = faces(g.nbr, nf);
  const std::vector<int> circ = circles(g, nc);
  std::vector<std::vector<int>> boundary(nf);
  for (std::size_t d = 0; d < face.size(); ++d) boundary[face[d]].push_back(static_cast<int>(d));
  for (const auto& darts : boundary)
    for (std::size_t i = 0; i < darts.size(); ++i)
      for (std::size_t j = i + 1; j < darts.size(); ++j) {
        const int d1 = darts[i], d2 = darts[j];
        const bool left = g.outgoing(d1);
        if (g.outgoing(d2) != left) continue;
        if (circ[g.edge(d1)] == circ[g.edge(d2)]) continue;
        // Push edge 1 across edge 2 through the face: new crossings X, Y,
        // with edge 1 over at both.
        const int u1 = g.edge(d1), v1 = g.nbr[u1];
        const int u2 = g.edge(d2), v2 = g.nbr[u2];
        const int x = 4 * g.crossings(), y = x + 4;
        g.nbr.resize(g.nbr.size() + 8, -1);
        g.pos.push_back(left);
        g.pos.push_back(!left);
        if (left) {
          g.link(u1, x + 3);
          g.link(x + 1, y + 1);
          g.link(y + 3, v1);
        } else {
          g.link(u1, x + 1);
          g.link(x + 3, y + 3);
          g.link(y + 1, v1);
        }
        g.link(u2, y + 0);
        g.link(y + 2, x + 0);
        g.link(x + 2, v2);
        return true;
      }
  return false;
}

BraidWord read_braid(const Oriented& g) {
  int nf = 0, nc = 0;
  const std::vector<int> face = faces(g.nbr, nf);
  const std::vector<int> circ = circles(g, nc);
  const int n = g.crossings();

  // Regions: faces merged across the Seifert smoothing at each crossing.
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < n; ++c) {
    const int a = g.pos[c] ? 1 : 0;
    parent[find(face[4 * c + a])] = find(face[4 * c + a + 2]);
  }
  // Left and right region of each circle.
  std::vector<int> lreg(nc, -1), rreg(nc, -1), some_edge(nc, -1);
  for (std::size_t u = 0; u < g.nbr.size(); ++u) {
    if (circ[u] < 0) continue;
    const int k = circ[u];
    const int l = find(face[u]), r = find(face[g.nbr[u]]);
    if (lreg[k] >= 0 && (lreg[k] != l || rreg[k] != r)) throw std::logic_error("braid form: circle bounds several regions");
    lreg[k] = l;
    rreg[k] = r;
    if (some_edge[k] < 0) some_edge[k] = static_cast<int>(u);
  }
  // Walk the nesting chain from an end region.
  std::map<int, std::vector<int>> on_left, on_right;
  for (int k = 0; k < nc; ++k) {
    on_left[lreg[k]].push_back(k);
    on_right[rreg[k]].push_back(k);
  }
  int first = -1;
  for (int k = 0; k < nc && first < 0; ++k)
    if (on_right[lreg[k]].empty()) first = k;
  if (first < 0) throw std::logic_error("braid form: Seifert circles are not nested");
  std::vector<int> chain{first};
  std::vector<int> level(nc, -1);
  level[first] = 0;
  while (true) {
    const auto& next = on_left[rreg[chain.back()]];
    if (next.empty()) break;
    if (next.size() != 1 || level[next[0]] >= 0) throw std::logic_error("braid form: Seifert circles are not nested");
    level[next[0]] = static_cast<int>(chain.size());
    chain.push_back(next[0]);
  }
  if (static_cast<int>(chain.size()) != nc) throw std::logic_error("braid form: Seifert circles are not nested");

  // A ray from the innermost region crosses each circle once, through edge
  // ray[i] of circle chain[i]; consecutive ray edges share a face.
  std::vector<std::vector<int>> boundary(nf);
  for (std::size_t d = 0; d < face.size(); ++d) boundary[face[d]].push_back(static_cast<int>(d));
  std::vector<int> ray(nc, -1);
  ray[0] = some_edge[chain[0]];
  for (int i = 1; i < nc; ++i) {
    const int f = face[g.nbr[ray[i - 1]]];  // right of circle i-1
    for (int d : boundary[f])
      if (circ[g.edge(d)] == chain[i]) {
        ray[i] = g.edge(d);
        break;
      }
    if (ray[i] < 0) throw std::logic_error("braid form: no ray through consecutive circles");
  }

  // Crossings along each circle, cut at the ray, give a partial order.
  std::vector<std::vector<int>> after(n);
  std::vector<int> indeg(n, 0);
  std::vector<int> gap(n, -1);
  for (int i = 0; i < nc; ++i) {
    int prev = -1;
    int u = ray[i];
    do {
      const int c = g.nbr[u] / 4;
      if (prev >= 0) {
        after[prev].push_back(c);
        ++indeg[c];
      }
      prev = c;
      gap[c] = gap[c] < 0 ? i : std::min(gap[c], i);
      u = g.smooth(g.nbr[u]);
    } while (u != ray[i]);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int c = 0; c < n; ++c)
    if (indeg[c] == 0) ready.push(c);
  BraidWord b;
  b.strands = nc;
  while (!ready.empty()) {
    const int c = ready.top();
    ready.pop();
    b.word.push_back(g.pos[c] ? gap[c] + 1 : -(gap[c] + 1));
    for (int o : after[c])
      if (--indeg[o] == 0) ready.push(o);
  }
  if (static_cast<int>(b.word.size()) != n) throw std::logic_error("braid form: crossing order is cyclic");
  return b;
}

void require_connected(const LinkDiagram& d, const char* who) {
  const int n = static_cast<int>(d.size());
  bool ok = d.free_loops() == 0 || (n == 0 && d.free_loops() == 1);
  if (ok && n > 0) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        const int o = d.partner(4 * c + s) / 4;
        if (!seen[o]) {
          seen[o] = 1;
          ++count;
          stack.push_back(o);
        }
      }
    }
    ok = count == n;
  }
  if (!ok) throw std::invalid_argument(std::string(who) + ": diagram is split; band its components together first");
}

}  // namespace

BraidWord braid_from_diagram(const LinkDiagram& d) {
  require_connected(d, "braid_from_diagram");
  if (d.size() == 0) return BraidWord{};
  Oriented g;
  g.nbr.resize(4 * d.size());
  for (int x = 0; x < static_cast<int>(g.nbr.size()); ++x) g.nbr[x] = d.partner(x);
  for (std::size_t c = 0; c < d.size(); ++c) g.pos.push_back(d.sign(c) > 0);
  // Each move lowers the number of Seifert circle pairs in bad position, so
  // the loop is bounded; the guard only protects against bugs.
  const std::size_t guard = 16 * (d.size() + 4) * (d.size() + 4);
  std::size_t moves = 0;
  while (vogel_move(g))
    if (++moves > guard) throw std::logic_error("braid_from_diagram: Vogel moves did not terminate");
  return read_braid(g);
}

SeifertData seifert_matrix_from_diagram(const LinkDiagram& d) {
  return seifert_matrix_from_braid(braid_from_diagram(d));
}

SeifertData seifert_matrix_from_braid(const BraidWord& b) {
  const int strands = b.strands;
  // Per gap between strands k and k+1: positions and signs of its crossings.
  std::vector<std::vector<std::pair<std::size_t, bool>>> gaps(std::max(strands - 1, 0));
  for (std::size_t pos = 0; pos < b.word.size(); ++pos) {
    const int g = b.word[pos];
    const int k = std::abs(g);
    if (g == 0 || k >= strands) throw std::invalid_argument("seifert_matrix_from_braid: generator out of range");
    gaps[k - 1].push_back({pos, g > 0});
  }
  for (int k = 0; k + 1 < strands; ++k)
    if (gaps[k].empty())
      throw std::invalid_argument("seifert_matrix_from_braid: generator " + std::to_string(k + 1) +
                                  " missing, the closure is split");

  // A generator of H_1 runs through two consecutive bands of one gap.
  struct Gen {
    std::size_t gap, first, second;
    bool pos_first, pos_second;
  };
  std::vector<Gen> gens;
  std::vector<std::size_t> start(gaps.size() + 1, 0);
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    start[k] = gens.size();
    for (std::size_t i = 0; i + 1 < gaps[k].size(); ++i)
      gens.push_back({k, gaps[k][i].first, gaps[k][i + 1].first, gaps[k][i].second, gaps[k][i + 1].second});
  }
  start[gaps.size()] = gens.size();

  const std::size_t n = gens.size();
  IntegerMatrix a(n, n);
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    for (std::size_t m = start[k]; m < start[k + 1]; ++m) {
      const Gen& g = gens[m];
      if (g.pos_first == g.pos_second) a(m, m) = g.pos_first ? -1 : 1;
      if (m + 1 < start[k + 1]) {
        if (g.pos_second)
          a(m + 1, m) = 1;
        else
          a(m, m + 1) = -1;
      }
      if (k + 1 < gaps.size())
        for (std::size_t l = start[k + 1]; l < start[k + 2]; ++l) {
          const Gen& h = gens[l];
          if (h.first < g.first && g.first < h.second && h.second < g.second)
            a(l, m) = 1;
          else if (g.first < h.first && h.first < g.second && g.second < h.second)
            a(l, m) = -1;
        }
    }
  }
  return SeifertData(std::move(a));
}

SpanningSurfaceData goeritz_from_diagram(const LinkDiagram& d) {
  require_connected(d, "goeritz_from_diagram");
  const long mu = static_cast<long>(d.components());
  if (d.size() == 0) return SpanningSurfaceData(IntegerSymmetricMatrix::zero(0), mu);
  std::vector<int> nbr(4 * d.size());
  for (int x = 0; x < static_cast<int>(nbr.size()); ++x) nbr[x] = d.partner(x);
  int nf = 0;
  const std::vector<int> face = faces(nbr, nf);
  // Checkerboard coloring: the two sides of every edge differ.
  std::vector<int> color(nf, -1);
  std::vector<std::vector<int>> adj(nf);
  for (std::size_t x = 0; x < nbr.size(); ++x) adj[face[x]].push_back(face[nbr[x]]);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int o : adj[f]) {
      if (color[o] < 0) {
        color[o] = 1 - color[f];
        stack.push_back(o);
      } else if (color[o] == color[f]) {
        throw std::logic_error("goeritz_from_diagram: faces are not 2-colorable");
      }
    }
  }
  // Index the white faces (color 0); the first one is dropped.
  std::vector<int> white(nf, -1);
  int nw = 0;
  for (int f = 0; f < nf; ++f)
    if (color[f] == 0) white[f] = nw++;
  IntegerMatrix g(nw, nw);
  for (std::size_t c = 0; c < d.size(); ++c) {
    // Corner k sits between slots k and k+1. eta = +1 when the corners swept
    // by turning the under-strand counterclockwise (0 and 2) are white; with
    // this sign the matrix is the Gordon-Litherland form of the black surface
    // in the convention where a Seifert surface gives A + A^T.
    const int base = 4 * static_cast<int>(c);
    const bool odd_white = color[face[base + 1]] == 0;
    const int eta = odd_white ? -1 : 1;
    const int i = white[face[base + (odd_white ? 1 : 0)]];
    const int j = white[face[base + (odd_white ? 3 : 2)]];
    if (i == j) continue;
    g(i, j) -= eta;
    g(j, i) -= eta;
    g(i, i) += eta;
    g(j, j) += eta;
  }
  std::vector<std::size_t> keep(nw - 1);
  std::iota(keep.begin(), keep.end(), 1);
  return SpanningSurfaceData(IntegerSymmetricMatrix(g.submatrix(keep, keep)), mu);
}

}  // namespace knotinv
