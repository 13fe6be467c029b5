#pragma once

// Exact symmetric linear algebra over Z and Q: determinants, Smith normal
// form cokernels, the mod-p block reduction used by singular determinants,
// and the p-adic normal forms of presentation matrices.

#include <map>
#include <random>
#include <vector>

#include "knotinv/matrix.hpp"

namespace knotinv {

/// Integer matrix with determinant +-1, checked on construction.
class UnimodularTransform {
 public:
  UnimodularTransform() = default;
  explicit UnimodularTransform(IntegerMatrix t);
  static UnimodularTransform identity(std::size_t n);

  std::size_t size() const { return t_.rows(); }
  const IntegerMatrix& matrix() const { return t_; }

  /// T M T^T.
  IntegerSymmetricMatrix congruence(const IntegerSymmetricMatrix& m) const;
  RationalSymmetricMatrix congruence(const RationalSymmetricMatrix& m) const;
  /// Exact integer inverse.
  UnimodularTransform inverse() const;
  UnimodularTransform transpose() const;

  friend UnimodularTransform operator*(const UnimodularTransform& a, const UnimodularTransform& b);

 private:
  struct Trusted {};
  UnimodularTransform(IntegerMatrix t, Trusted) : t_(std::move(t)) {}
  IntegerMatrix t_;
};

struct CokernelDecomposition {
  /// p -> exponents k_1 <= ... <= k_n of the p-parts of the invariant factors.
  /// One entry per invariant factor; free (zero) factors contribute exponent 0
  /// and are counted in free_rank instead.
  std::map<Integer, std::vector<unsigned>> prime_parts;
  /// Nonzero invariant factors d_1 | d_2 | ... (units included).
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  /// |coker| when finite, else 0.
  Integer order_or_zero;

  bool finite() const { return free_rank == 0; }
  /// Cyclic (including trivial) and finite.
  bool cyclic() const;
  /// Exponents at p, all zeros when p does not divide the order.
  std::vector<unsigned> exponents(const Integer& p) const;
};

/// U * M * V = D with U, V unimodular and D diagonal in Smith normal form.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
};

Integer det_exact(const IntegerMatrix& m);
inline Integer det_exact(const IntegerSymmetricMatrix& m) { return det_exact(m.matrix()); }
Rational det_rational(const RationalMatrix& m);

/// Throws std::domain_error for singular input.
RationalMatrix inverse_rational(const RationalMatrix& m);
RationalMatrix inverse_rational(const IntegerMatrix& m);

/// Positive minus negative eigenvalue count, by congruence diagonalization over Q.
long signature(const IntegerSymmetricMatrix& m);

/// Rank over F_p for a prime p (p = 2 allowed).
std::size_t rank_mod_p(const IntegerMatrix& m, const Integer& p);
inline std::size_t corank_mod_p(const IntegerMatrix& m, const Integer& p) { return m.rows() - rank_mod_p(m, p); }

SmithForm smith_normal_form(const IntegerMatrix& m);
CokernelDecomposition smith_cokernel(const IntegerMatrix& m);

struct ModPReduction {
  UnimodularTransform transform;
  /// Upper-left block of T M T^T with det coprime to p; possibly 0x0.
  IntegerSymmetricMatrix block;
  /// T M T^T itself; entries outside `block` are divisible by p.
  IntegerSymmetricMatrix reduced;
  std::size_t corank = 0;
};

/// Symmetric elimination over F_p lifted to integer shears and permutations.
/// Pivots are taken at the lowest admissible index unless `rng` is supplied,
/// in which case an admissible pivot is drawn at random.
ModPReduction mod_p_block_reduce(const IntegerSymmetricMatrix& m, const Integer& p,
                                 std::mt19937_64* rng = nullptr);

struct RationalNormalization {
  UnimodularTransform transform;  // S
  RationalSymmetricMatrix normalized;  // S N S^T
};

/// Finds unimodular S so that N' = S N S^T has ord_p of the diagonal
/// nonincreasing down the diagonal, each diagonal entry of strictly smaller
/// ord_p than every off-diagonal entry in its row, and all off-diagonal
/// ord_p >= rho. N must be nonsingular.
RationalNormalization rational_normalize(const RationalSymmetricMatrix& n, const Integer& p, long rho);

struct InverseOrdNormalization {
  UnimodularTransform transform;  // T
  IntegerSymmetricMatrix conjugate;  // T M T^T
  RationalSymmetricMatrix conjugate_inverse;  // (T M T^T)^{-1}
  std::vector<unsigned> exponents;  // k_1 <= ... <= k_n
};

/// Unimodular T with (T M T^T)^{-1} p-integral off the diagonal and of
/// ord_p exactly -k_i on the diagonal. Throws std::domain_error if M is singular.
InverseOrdNormalization inverse_ord_normalize(const IntegerSymmetricMatrix& m, const Integer& p);

struct JacobiSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of det M[I;J] = (-1)^{sum I + sum J} det M det M^{-1}[I^c; J^c]
/// (indices 1-based in the sign). Throws for |I| != |J| or singular M.
JacobiSides jacobi_minor_identity(const RationalSymmetricMatrix& m, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols);

}  // namespace knotinv
