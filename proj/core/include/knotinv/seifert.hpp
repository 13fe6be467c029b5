#pragma once

// Seifert and Gordon-Litherland data, the singular determinant delta_p and
// the classical invariants read off a Seifert matrix.

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "knotinv/exactlinalg.hpp"

namespace knotinv {

/// Unsymmetrized Seifert matrix A together with M = A + A^T.
class SeifertData {
 public:
  /// Throws std::invalid_argument for non-square A.
  explicit SeifertData(IntegerMatrix a);

  std::size_t size() const { return a_.rows(); }
  const IntegerMatrix& seifert() const { return a_; }
  const IntegerSymmetricMatrix& symmetrized() const { return m_; }

 private:
  IntegerMatrix a_;
  IntegerSymmetricMatrix m_;
};

/// Gordon-Litherland matrix of a spanning surface with its caller-supplied mu.
struct SpanningSurfaceData {
  SpanningSurfaceData(IntegerSymmetricMatrix r, long mu);

  IntegerSymmetricMatrix r;
  long mu;
};

struct LinkInvariantBundle {
  long components = 1;
  Integer det;
  long sigma = 0;
  std::map<Integer, std::size_t> d_p;
  std::map<Integer, Sign> delta_p;
  /// (-1)^Arf: for knots always, for proper links when A is known.
  std::optional<Sign> arf_sign;
};

/// Corank over F_2 plus one. Throws std::invalid_argument on an odd diagonal entry.
long mu_of(const IntegerSymmetricMatrix& m);

/// dim ker(M mod p).
inline std::size_t d_p(const IntegerSymmetricMatrix& m, const Integer& p) { return corank_mod_p(m.matrix(), p); }

/// Singular determinant of a symmetric even-diagonal matrix. With `rng` the
/// mod-p reduction picks random pivots, which must not affect the result.
Sign delta_p(const IntegerSymmetricMatrix& m, const Integer& p, std::mt19937_64* rng = nullptr);

/// v^T R v mod 8 for a characteristic vector v, one with R v = diag(R) mod 2.
unsigned oddity(const IntegerSymmetricMatrix& r);

/// Singular determinant with the oddity correction. Throws std::invalid_argument
/// if n + mu - 1 - o(R) is odd.
Sign delta_p_gl(const SpanningSurfaceData& s, const Integer& p, std::mt19937_64* rng = nullptr);

/// (-1)^Arf of a knot from its determinant: +1 iff det = +-1 mod 8.
Sign arf_sign_from_det(const Integer& det);
/// (-1)^Arf of the quadratic form x^T A x mod 2, or nothing when the form is
/// nonzero on the radical of A + A^T mod 2, i.e. when the link is not proper.
std::optional<Sign> arf_sign(const SeifertData& a);

LinkInvariantBundle classical_invariants(const SeifertData& a, const std::vector<Integer>& primes);
LinkInvariantBundle classical_invariants(const IntegerSymmetricMatrix& m, const std::vector<Integer>& primes);

/// M + the hyperbolic block [[0,1],[1,0]].
IntegerSymmetricMatrix stabilize(const IntegerSymmetricMatrix& m);

enum class CrossingChangeCase { Diagonal = 1, Hyperbolic = 2 };

/// (M_+, M_-) = P + (a -+ 1) or P + [[0,1],[1,a -+ 1]]; the two differ only in
/// the last diagonal entry, which is larger by two in M_-. P must have even
/// diagonal and a must be odd so that both are symmetrized Seifert matrices.
std::pair<IntegerSymmetricMatrix, IntegerSymmetricMatrix> crossing_change_pair(const IntegerSymmetricMatrix& p,
                                                                               const Integer& a,
                                                                               CrossingChangeCase which);

}  // namespace knotinv
