#pragma once

// Oriented link diagrams in PD form.
//
// A crossing X(a,b,c,d) lists its four edge labels counterclockwise starting
// from the incoming under-strand, so the under-strand runs a -> c. The
// over-strand runs d -> b (a positive crossing) or b -> d (negative); the
// direction is inferred from the under-passes of its component, and from the
// label order for components that never pass under.
//
// Internally each crossing has four slots 0..3 in the same order; a dart is
// 4 * crossing + slot and every dart is joined by an edge to one partner dart.

#include <array>
#include <string>
#include <vector>

#include "knotinv/laurent.hpp"
#include "knotinv/seifert.hpp"

namespace knotinv {

using PDCrossing = std::array<long, 4>;

class LinkDiagram {
 public:
  LinkDiagram() : free_loops_(1) {}

  /// Throws std::invalid_argument unless every label appears exactly twice and
  /// the strands can be oriented consistently. `free_loops` counts crossingless
  /// unknotted components.
  static LinkDiagram from_pd(std::vector<PDCrossing> crossings, std::size_t free_loops = 0);
  /// As from_pd with the over-strand direction given explicitly per crossing
  /// (true: enters at slot 3, i.e. positive).
  static LinkDiagram from_pd_oriented(std::vector<PDCrossing> crossings, std::vector<bool> positive,
                                      std::size_t free_loops = 0);

  std::size_t size() const { return pd_.size(); }
  std::size_t free_loops() const { return free_loops_; }
  const std::vector<PDCrossing>& crossings() const { return pd_; }

  /// +1 or -1.
  int sign(std::size_t crossing) const { return positive_[crossing] ? 1 : -1; }
  long writhe() const;
  std::size_t components() const { return component_count_ + free_loops_; }
  /// Component index of the strand through the given slot; components with
  /// crossings come first, free loops are numbered after them.
  std::size_t component_of(std::size_t crossing, int slot) const { return component_[4 * crossing + slot]; }

  int partner(int dart) const { return partner_[dart]; }
  /// Whether the edge at this dart leaves the crossing.
  bool outgoing(int dart) const;

  /// Sum of signs over crossings between components i and j, halved.
  long linking_number(std::size_t i, std::size_t j) const;
  /// Every component has even total linking number with the rest.
  bool is_proper() const;

  /// Same diagram with one component's orientation reversed.
  LinkDiagram reversed(std::size_t component) const;
  /// Mirror image (all crossings switched).
  LinkDiagram mirror() const;

  /// "X(a,b,c,d) ..." followed by one "O" per free loop.
  std::string pd_text() const;

 private:
  void build();

  std::vector<PDCrossing> pd_;
  std::vector<bool> positive_;
  std::size_t free_loops_ = 0;
  std::vector<int> partner_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Parses whitespace-separated "X(a,b,c,d)" (or "X[a,b,c,d]") tokens and "O"
/// tokens for free loops. Empty text is the unknot. Throws
/// std::invalid_argument on malformed input.
LinkDiagram parse_pd(const std::string& text);

/// Closure of a braid word on `strands` strands; generator k > 0 is sigma_k
/// (a positive crossing), -k its inverse.
LinkDiagram pd_from_braid(const std::vector<int>& word, int strands);

/// Jones polynomial via the Kauffman bracket state sum, exponents in units of
/// t^{1/2}. Throws std::length_error above `budget` crossings.
LaurentPolynomial jones_via_bracket(const LinkDiagram& d, std::size_t budget = 22, unsigned threads = 0);

/// Q polynomial in z by the unoriented skein Q_+ + Q_- = z (Q_0 + Q_inf),
/// memoized on canonical diagram encodings. Throws std::length_error above
/// `budget` crossings.
LaurentPolynomial q_via_skein(const LinkDiagram& d, std::size_t budget = 16);

/// Braid word of a braided diagram obtained by Vogel moves, with strand count.
struct BraidWord {
  std::vector<int> word;
  int strands = 1;
};
BraidWord braid_from_diagram(const LinkDiagram& d);

/// Seifert matrix of the closed braid's Seifert surface. Requires every
/// generator sigma_1..sigma_{n-1} to occur.
SeifertData seifert_matrix_from_braid(const BraidWord& b);

/// Seifert matrix of a connected diagram via braid form. Throws
/// std::invalid_argument for split diagrams.
SeifertData seifert_matrix_from_diagram(const LinkDiagram& d);

/// Goeritz matrix of a checkerboard coloring as a Gordon-Litherland matrix,
/// with mu = c(L) for the (connected) checkerboard surface. Throws
/// std::invalid_argument for split diagrams.
///
/// The form does not see the orientation of the link, so delta_p_gl of it
/// agrees with the Seifert route for knots but, for links, only for the
/// orientations compatible with the surface: the Hopf diagram gives
/// delta_3 = +1 whichever of H+ or H- it is oriented as.
SpanningSurfaceData goeritz_from_diagram(const LinkDiagram& d);

}  // namespace knotinv
