#pragma once

// Exact special values of the Jones, Q and Alexander polynomials, either
// read off classical invariants or obtained by evaluating a polynomial.
//
// Evaluation at t = e^{is} means t^{1/2} = e^{is/2}. The Jones and Alexander
// polynomials are stored with t^{1/2} as the exponent unit.

#include <optional>

#include "knotinv/algebraic.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/linkform.hpp"
#include "knotinv/seifert.hpp"

namespace knotinv {

enum class JonesPoint { One, MinusOne, Zeta3, I, Zeta6 };

/// k such that t^{1/2} = zeta_24^k at the given point.
long half_angle_zeta24(JonesPoint point);

/// V(t) at a special point, with t^{1/2} taken as above.
Cyclotomic24 evaluate_half_integral(const LaurentPolynomial& v, JonesPoint point);
/// Q(z) at z = (sqrt5 - 1)/2.
Golden evaluate_at_golden(const LaurentPolynomial& q);

/// V_K(zeta_6) of a knot from det = 3^alpha q, d_3 and wall_parity(W, 3)
/// = sum_k r_{3,k} mod 2:  nu(q) (-1)^{alpha + sum r} (i sqrt3)^{d_3}.
/// Written with the B-summand count this is nu(q) (-1)^{alpha + d_3 + #B}.
Cyclotomic24 jones_at_zeta6_knot(const Integer& det, std::size_t dim_f3, unsigned r3_parity);

struct JonesSpecialValues {
  Cyclotomic24 at_one;
  Cyclotomic24 at_minus_one;
  Cyclotomic24 at_zeta3;
  Cyclotomic24 at_i;
  Cyclotomic24 at_zeta6;
};

/// V(1), V(-1), V(zeta_3), V(i), V(zeta_6) of a link from its classical
/// invariants. `proper_arf` is (-1)^Arf for proper links and empty otherwise,
/// in which case V(i) = 0. Needs d_3 in the bundle; throws
/// std::invalid_argument for a knot without `proper_arf`.
JonesSpecialValues jones_special_values(const LinkInvariantBundle& bundle, Sign delta3, std::optional<Sign> proper_arf);

/// Q_K((sqrt5-1)/2) of a knot from det = 5^alpha q, d_5 and wall_parity(W, 5):
/// (q|5) (-1)^{sum r + d_5} sqrt5^{d_5}, i.e. the sign counts B summands.
Golden q_at_golden(const Integer& det, std::size_t d5, unsigned r5_parity);

/// delta_5(M) sqrt5^{d_5(M)} for any symmetrized Seifert matrix.
Golden q_at_golden_link(const IntegerSymmetricMatrix& m);

/// det(-t^{1/2} A + t^{-1/2} A^T), exponents in units of t^{1/2}.
LaurentPolynomial alexander_poly(const SeifertData& a);
/// Delta(-1) with t^{1/2} = i.
Cyclotomic24 alexander_at_minus1(const SeifertData& a);

/// i^k for any integer k.
Cyclotomic24 i_power(long k);

}  // namespace knotinv
