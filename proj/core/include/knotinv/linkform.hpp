#pragma once

// Linking forms on cokernels of nonsingular symmetric integer matrices and
// Wall's A/B decomposition of odd-order forms.

#include <iosfwd>
#include <string>
#include <vector>

#include "knotinv/exactlinalg.hpp"

namespace knotinv {

/// lambda_M([x],[y]) = x^T M^{-1} y mod 1 on coker M.
class LinkingFormPresentation {
 public:
  /// Throws std::domain_error if det M = 0.
  explicit LinkingFormPresentation(IntegerSymmetricMatrix m);

  std::size_t size() const { return m_.size(); }
  const IntegerSymmetricMatrix& matrix() const { return m_; }
  const RationalMatrix& inverse() const { return inv_; }
  /// |det M|, the order of the cokernel.
  const Integer& order() const { return order_; }

 private:
  IntegerSymmetricMatrix m_;
  RationalMatrix inv_;
  Integer order_;
};

/// Representative of x in Q/Z lying in [0, 1).
Rational reduce_mod_one(const Rational& x);

/// Throws std::invalid_argument on size mismatch.
Rational eval_form(const LinkingFormPresentation& form, const std::vector<Integer>& x, const std::vector<Integer>& y);

enum class WallType { A, B };

struct WallSummand {
  Integer p;
  unsigned k = 0;
  WallType type = WallType::A;

  friend bool operator==(const WallSummand&, const WallSummand&) = default;
};

/// Multiset of A_{p^k}, B_{p^k} summands, kept in canonical form: for each
/// (p, k) at most one B remains after trading B + B for A + A.
class WallDecomposition {
 public:
  WallDecomposition() = default;
  explicit WallDecomposition(std::vector<WallSummand> summands);

  /// Sorted by (p, k, type) with A before B.
  const std::vector<WallSummand>& summands() const { return summands_; }
  /// Product of p^k over all summands.
  Integer order() const;
  /// Number of A_{p^k} summands mod 2.
  unsigned r(const Integer& p, unsigned k) const;

  /// One "p k A|B" line per summand.
  std::string serialize() const;
  /// Inverse of serialize; throws std::runtime_error on malformed text.
  static WallDecomposition parse(const std::string& text);

  /// Orthogonal sum.
  friend WallDecomposition operator+(const WallDecomposition& a, const WallDecomposition& b);
  friend bool operator==(const WallDecomposition&, const WallDecomposition&) = default;

 private:
  std::vector<WallSummand> summands_;
};

std::ostream& operator<<(std::ostream& os, const WallDecomposition& w);

/// Requires |det M| odd; throws std::domain_error otherwise.
WallDecomposition wall_decompose(const LinkingFormPresentation& form);

inline unsigned r_pk(const WallDecomposition& w, const Integer& p, unsigned k) { return w.r(p, k); }

/// sum_k r_{p,k} mod 2.
unsigned wall_parity(const WallDecomposition& w, const Integer& p);

/// Number of B_{p^k} summands over all k, mod 2. Equals wall_parity plus the
/// number of p-primary cyclic summands, mod 2.
unsigned wall_b_parity(const WallDecomposition& w, const Integer& p);

/// delta_p of a 2g x 2g even-diagonal matrix with odd determinant, read off
/// the linking form: (q|p) (-1)^{#B} (-1)^{(p-1)/2 (alpha + m + (q-1)/2)} with
/// |det| = p^alpha q and m = d_p. The exponent counts B summands; counting
/// A summands instead is off by (-1)^m.
Sign delta_p_from_linking_form(const WallDecomposition& w, const Integer& det, std::size_t m, const Integer& p);

/// Same group and the same r_{p,k} for every (p, k).
bool isometric(const WallDecomposition& a, const WallDecomposition& b);

}  // namespace knotinv
