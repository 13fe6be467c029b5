#pragma once

// Unknotting-number obstructions from symmetrized Seifert matrices.
//
// Everything here reports constraints. Nothing asserts an unknotting number:
// the underlying theorems only run one way.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "knotinv/algebraic.hpp"
#include "knotinv/seifert.hpp"

namespace knotinv {

/// d_p(M) - mu(M) + 1. Values <= 0 say nothing.
long wendt_bound(const IntegerSymmetricMatrix& m, const Integer& p);

/// Which sign rule applies at the Wendt bound, by p mod 8.
enum class ParityRule {
  DeltaMustBePlus,    // p = 1: delta_p = +1
  DeltaEqParityUMinus,  // p = 3: delta_p = (-1)^{u_-}
  DeltaEqParityU,     // p = 5: delta_p = (-1)^u
  DeltaEqParityUPlus,   // p = 7: delta_p = (-1)^{u_+}
};

ParityRule parity_rule_for(const Integer& p);
const char* to_string(ParityRule rule);

/// What the signed obstruction says about a link whose unknotting number
/// equals base_bound, split as u_+ positive and u_- negative changes.
struct SignedUnknottingConstraint {
  Integer p;
  long base_bound = 0;
  ParityRule parity_rule = ParityRule::DeltaMustBePlus;
  Sign delta;

  /// Whether (u_+, u_-) can realize u = base_bound. Throws
  /// std::invalid_argument unless u_+ + u_- == base_bound and both are >= 0.
  bool allows(long u_plus, long u_minus) const;
  /// Every admissible u_+ in [0, base_bound]; empty means u > base_bound.
  std::vector<long> allowed_u_plus() const;
};

SignedUnknottingConstraint signed_obstruction(const IntegerSymmetricMatrix& m, const Integer& p);

/// wendt_bound + 1 when the signed obstruction rules out every split at the
/// bound without sign information (p = 1, 5 mod 8); wendt_bound otherwise.
long improved_bound(const IntegerSymmetricMatrix& m, const Integer& p);

/// Largest cokernel order accepted by the generator searches.
inline const Integer kGeneratorSearchLimit{10000000};

struct LickorishPrime {
  std::size_t d_p = 0;
  Sign delta;
  bool pass_plus = false;   // zeta = +1
  bool pass_minus = false;  // zeta = -1
};

struct LickorishReport {
  std::vector<int> admissible_zeta;  // subset of {-1, +1}, ascending
  std::map<Integer, LickorishPrime> per_prime;
};

/// The d_p / delta_p pattern test for a knot with det != 0. Throws
/// std::invalid_argument for links (mu > 1) or det = 0.
LickorishReport lickorish_check(const IntegerSymmetricMatrix& m);

/// Direct search: the zetas for which some generator h of coker M has
/// lambda(h, h) = 2 zeta (-1)^{(det-1)/2} / det. Empty when coker M is not
/// cyclic. Throws std::invalid_argument for links, det = 0 or det above
/// kGeneratorSearchLimit.
std::vector<int> lickorish_generator_search(const IntegerSymmetricMatrix& m);

struct StoimenowReport {
  Golden q_value;           // Q at (sqrt5 - 1)/2, from delta_5 and d_5
  bool generator_exists = false;  // some h with lambda(h, h) = +-2/det
  Golden predicted;         // -sqrt5 if such h exists, +sqrt5 otherwise
  bool counterexample = false;
};

/// Needs a knot with cyclic coker and 5 | det; throws std::invalid_argument
/// otherwise.
StoimenowReport stoimenow_check(const IntegerSymmetricMatrix& m);

/// V(zeta_6) predicted by the signed obstruction at p = 3 for an unknotting
/// with u_- negative changes: (-1)^{u_-} i^{c-1} (i sqrt3)^{d_3}.
Cyclotomic24 traczyk_value(const IntegerSymmetricMatrix& m, long u_minus);

/// If q = (-1)^{a+c} sqrt5^a for some a >= 0, the bound u >= a - c + 2.
std::optional<long> golden_unknotting_bound(const Golden& q, long components);

/// A hypothetical unknotting run backwards: matrices[0] is an unlink matrix
/// and each later matrix is congruent to M -+ 2 u u^T, with M the previous one
/// (possibly stabilized) and u primitive; in a basis ending in u the two
/// differ only in the last diagonal entry, as for a crossing change.
/// positive[k] says whether the crossing changed between matrices[k+1] and
/// matrices[k] was positive in the more knotted link.
struct UnknottingSequence {
  std::vector<IntegerSymmetricMatrix> matrices;
  std::vector<bool> positive;
  long u_plus() const;
  long u_minus() const;
};

/// Random sequence of `steps` changes that each raise d_p by one, starting
/// from the zero matrix of size components - 1.
UnknottingSequence random_unknotting_sequence(std::mt19937_64& rng, const Integer& p, long components,
                                              std::size_t steps);

/// Checks that d_p rises by exactly one per step from d_p = c - 1, so the
/// end of the sequence sits at the Wendt bound, and returns the constraint
/// there. Throws std::invalid_argument otherwise: a change that leaves d_p
/// unchanged cannot occur in a minimal sequence at the bound.
SignedUnknottingConstraint constraint_at_end(const UnknottingSequence& seq, const Integer& p);

}  // namespace knotinv
