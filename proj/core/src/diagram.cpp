#include "knotinv/diagram.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace knotinv {

namespace {

int opposite(int dart) { return (dart & ~3) | ((dart + 2) & 3); }

}  // namespace

LinkDiagram LinkDiagram::from_pd(std::vector<PDCrossing> crossings, std::size_t free_loops) {
  LinkDiagram d;
  d.pd_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.positive_.clear();
  d.build();
  return d;
}

LinkDiagram LinkDiagram::from_pd_oriented(std::vector<PDCrossing> crossings, std::vector<bool> positive,
                                          std::size_t free_loops) {
  if (positive.size() != crossings.size()) throw std::invalid_argument("from_pd_oriented: one flag per crossing");
  LinkDiagram d;
  d.pd_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.positive_ = std::move(positive);
  d.build();
  return d;
}

void LinkDiagram::build() {
  const int darts = static_cast<int>(4 * pd_.size());
  std::map<long, std::vector<int>> where;
  for (int x = 0; x < darts; ++x) where[pd_[x / 4][x % 4]].push_back(x);
  partner_.assign(darts, -1);
  for (const auto& [label, ds] : where) {
    if (ds.size() != 2)
      throw std::invalid_argument("PD label " + std::to_string(label) + " occurs " + std::to_string(ds.size()) +
                                  " times, expected 2");
    partner_[ds[0]] = ds[1];
    partner_[ds[1]] = ds[0];
  }

  const bool given = !positive_.empty();
  std::vector<bool> positive(pd_.size(), false);
  std::vector<char> decided(pd_.size(), 0);
  component_.assign(darts, 0);
  std::vector<char> seen(darts, 0);
  component_count_ = 0;
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    // Walk the strand: enter at e, leave at opposite(e), cross the edge.
    std::vector<int> entries;
    int e = start;
    do {
      entries.push_back(e);
      seen[e] = seen[opposite(e)] = 1;
      e = partner_[opposite(e)];
    } while (e != start);
    const std::size_t comp = component_count_++;
    for (int x : entries) component_[x] = component_[opposite(x)] = comp;

    // +1 if the walk follows the orientation, -1 if it runs against it.
    int dir = 0;
    for (int x : entries) {
      const int s = x % 4;
      if (s == 1 || s == 3) continue;
      const int v = s == 0 ? 1 : -1;
      if (dir != 0 && dir != v)
        throw std::invalid_argument("PD: component " + std::to_string(comp) + " passes under in both directions");
      dir = v;
    }
    if (dir == 0) {
      const int x = entries.front();
      const int c = x / 4, s = x % 4;
      if (given) {
        dir = ((s == 3) == static_cast<bool>(positive_[c])) ? 1 : -1;
      } else {
        // Overpass-only component: orient so that labels increase.
        const long in = pd_[c][s], out = pd_[c][(s + 2) % 4];
        dir = (out == in + 1 || in > out + 1) ? 1 : -1;
      }
    }
    for (int x : entries) {
      const int s = x % 4;
      if (s == 0 || s == 2) continue;
      const int real_in = dir == 1 ? s : (s + 2) % 4;
      const std::size_t c = static_cast<std::size_t>(x / 4);
      const bool pos = real_in == 3;
      if (decided[c] && positive[c] != pos)
        throw std::invalid_argument("PD: inconsistent over-strand orientation at crossing " + std::to_string(c));
      decided[c] = 1;
      positive[c] = pos;
    }
  }
  if (given) {
    for (std::size_t c = 0; c < pd_.size(); ++c)
      if (positive[c] != positive_[c])
        throw std::invalid_argument("PD: orientation flag contradicts strand direction at crossing " +
                                    std::to_string(c));
  }
  positive_ = std::move(positive);
  if (pd_.empty() && free_loops_ == 0) free_loops_ = 1;
}

bool LinkDiagram::outgoing(int dart) const {
  switch (dart % 4) {
    case 0: return false;
    case 2: return true;
    case 1: return positive_[dart / 4];
    default: return !positive_[dart / 4];
  }
}

long LinkDiagram::writhe() const {
  long w = 0;
  for (std::size_t c = 0; c < size(); ++c) w += sign(c);
  return w;
}

long LinkDiagram::linking_number(std::size_t i, std::size_t j) const {
  if (i >= components() || j >= components()) throw std::out_of_range("linking_number: no such component");
  if (i == j) throw std::invalid_argument("linking_number: components must differ");
  long sum = 0;
  for (std::size_t c = 0; c < size(); ++c) {
    const std::size_t u = component_of(c, 0), o = component_of(c, 1);
    if ((u == i && o == j) || (u == j && o == i)) sum += sign(c);
  }
  return sum / 2;
}

bool LinkDiagram::is_proper() const {
  for (std::size_t i = 0; i < components(); ++i) {
    long total = 0;
    for (std::size_t j = 0; j < components(); ++j)
      if (j != i) total += linking_number(i, j);
    if (total % 2 != 0) return false;
  }
  return true;
}

LinkDiagram LinkDiagram::reversed(std::size_t component) const {
  if (component >= components()) throw std::out_of_range("reversed: no such component");
  std::vector<PDCrossing> pd;
  std::vector<bool> pos;
  for (std::size_t c = 0; c < size(); ++c) {
    const bool rot = component_of(c, 0) == component;
    int over_in = positive_[c] ? 3 : 1;
    if (component_of(c, 1) == component) over_in = 4 - over_in;
    const auto& x = pd_[c];
    pd.push_back(rot ? PDCrossing{x[2], x[3], x[0], x[1]} : x);
    pos.push_back((rot ? (over_in + 2) % 4 : over_in) == 3);
  }
  return from_pd_oriented(std::move(pd), std::move(pos), free_loops_);
}

LinkDiagram LinkDiagram::mirror() const {
  std::vector<PDCrossing> pd;
  std::vector<bool> pos;
  for (std::size_t c = 0; c < size(); ++c) {
    const auto& x = pd_[c];
    if (positive_[c]) {
      pd.push_back({x[3], x[0], x[1], x[2]});
      pos.push_back(false);
    } else {
      pd.push_back({x[1], x[2], x[3], x[0]});
      pos.push_back(true);
    }
  }
  return from_pd_oriented(std::move(pd), std::move(pos), free_loops_);
}

std::string LinkDiagram::pd_text() const {
  std::ostringstream os;
  const char* sep = "";
  for (const auto& x : pd_) {
    os << sep << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
    sep = " ";
  }
  for (std::size_t i = 0; i < free_loops_; ++i) {
    os << sep << 'O';
    sep = " ";
  }
  return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<PDCrossing> crossings;
  std::size_t loops = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("PD parse error at offset " + std::to_string(i) + ": " + why);
  };
  auto skip = [&] {
    while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == ';')) ++i;
  };
  skip();
  while (i < n) {
    const char c = text[i];
    if (c == 'O' || c == 'o') {
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',' && text[i] != ';')
        fail("unexpected character after O");
      ++loops;
    } else if (c == 'X' || c == 'x') {
      ++i;
      if (i >= n || (text[i] != '(' && text[i] != '[')) fail("expected ( or [ after X");
      const char close = text[i] == '(' ? ')' : ']';
      ++i;
      PDCrossing x{};
      for (int k = 0; k < 4; ++k) {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || (k > 0 && text[i] == ','))) ++i;
        std::size_t used = 0;
        try {
          x[k] = std::stol(text.substr(i), &used);
        } catch (const std::exception&) {
          fail("expected an integer label");
        }
        i += used;
      }
      while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i >= n || text[i] != close) fail(std::string("expected ") + close);
      ++i;
      crossings.push_back(x);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip();
  }
  if (crossings.empty() && loops == 0) return LinkDiagram{};
  return LinkDiagram::from_pd(std::move(crossings), loops);
}

LinkDiagram pd_from_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) throw std::invalid_argument("pd_from_braid: need at least one strand");
  std::vector<long> cur(strands);
  for (int k = 0; k < strands; ++k) cur[k] = k + 1;
  long next = strands + 1;
  std::vector<PDCrossing> pd;
  std::vector<bool> pos;
  for (int g : word) {
    const int k = g > 0 ? g : -g;
    if (k < 1 || k >= strands) throw std::invalid_argument("pd_from_braid: generator " + std::to_string(g) + " out of range");
    const long a = cur[k - 1], b = cur[k];
    const long left = next++, right = next++;
    // Strands run upwards; sigma_k carries the left strand over to the right.
    if (g > 0) {
      pd.push_back({b, right, left, a});
      pos.push_back(true);
    } else {
      pd.push_back({a, b, right, left});
      pos.push_back(false);
    }
    cur[k - 1] = left;
    cur[k] = right;
  }
  std::size_t loops = 0;
  std::map<long, long> close;
  for (int k = 0; k < strands; ++k) {
    if (cur[k] == k + 1)
      ++loops;
    else
      close[cur[k]] = k + 1;
  }
  for (auto& x : pd)
    for (auto& l : x)
      if (auto it = close.find(l); it != close.end()) l = it->second;
  if (pd.empty()) return LinkDiagram::from_pd({}, loops);
  return LinkDiagram::from_pd_oriented(std::move(pd), std::move(pos), loops);
}

}  // namespace knotinv
