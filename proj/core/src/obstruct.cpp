#include "knotinv/obstruct.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "knotinv/evaluate.hpp"
#include "knotinv/linkform.hpp"

namespace knotinv {

namespace {

long p_mod8(const Integer& p) {
  require_odd_prime(p);
  return mod_floor(p, 8).get_si();
}

void require_knot(const IntegerSymmetricMatrix& m, const char* who) {
  if (mu_of(m) != 1) throw std::invalid_argument(std::string(who) + ": needs a knot matrix (mu = 1)");
}

// The rule of the signed obstruction for a given split.
bool rule_holds(ParityRule rule, Sign delta, long u_plus, long u_minus) {
  switch (rule) {
    case ParityRule::DeltaMustBePlus:
      return delta == Sign{};
    case ParityRule::DeltaEqParityUMinus:
      return delta == Sign::parity(u_minus);
    case ParityRule::DeltaEqParityU:
      return delta == Sign::parity(u_plus + u_minus);
    case ParityRule::DeltaEqParityUPlus:
      return delta == Sign::parity(u_plus);
  }
  return false;
}

// lambda(h', h') * det for a generator h' of a cyclic cokernel, as an integer
// coprime to det, or nothing if the cokernel is not cyclic.
std::optional<Integer> generator_self_linking(const IntegerSymmetricMatrix& m, const Integer& det) {
  const SmithForm s = smith_normal_form(m.matrix());
  const std::size_t n = m.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (abs(s.diagonal(i, i)) != 1) return std::nullopt;
  if (det == 1) return Integer(0);
  // U M V = D, so x -> U x identifies coker M with coker D and the last
  // column of U^{-1} generates it.
  const IntegerMatrix uinv = UnimodularTransform(s.left).inverse().matrix();
  std::vector<Integer> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = uinv(i, n - 1);
  const LinkingFormPresentation form(m);
  const Rational lam = eval_form(form, h, h) * det;
  if (lam.get_den() != 1) throw std::logic_error("generator_self_linking: lambda * det is not integral");
  return mod_floor(lam.get_num(), det);
}

}  // namespace

long wendt_bound(const IntegerSymmetricMatrix& m, const Integer& p) {
  require_odd_prime(p);
  return static_cast<long>(d_p(m, p)) - mu_of(m) + 1;
}

ParityRule parity_rule_for(const Integer& p) {
  switch (p_mod8(p)) {
    case 1:
      return ParityRule::DeltaMustBePlus;
    case 3:
      return ParityRule::DeltaEqParityUMinus;
    case 5:
      return ParityRule::DeltaEqParityU;
    default:
      return ParityRule::DeltaEqParityUPlus;
  }
}

const char* to_string(ParityRule rule) {
  switch (rule) {
    case ParityRule::DeltaMustBePlus:
      return "delta_must_be_plus";
    case ParityRule::DeltaEqParityUMinus:
      return "delta_eq_parity_u_minus";
    case ParityRule::DeltaEqParityU:
      return "delta_eq_parity_u";
    case ParityRule::DeltaEqParityUPlus:
      return "delta_eq_parity_u_plus";
  }
  return "?";
}

bool SignedUnknottingConstraint::allows(long u_plus, long u_minus) const {
  if (u_plus < 0 || u_minus < 0 || u_plus + u_minus != base_bound)
    throw std::invalid_argument("SignedUnknottingConstraint: split must be non-negative and sum to " +
                                std::to_string(base_bound));
  return rule_holds(parity_rule, delta, u_plus, u_minus);
}

std::vector<long> SignedUnknottingConstraint::allowed_u_plus() const {
  std::vector<long> out;
  for (long up = 0; up <= base_bound; ++up)
    if (allows(up, base_bound - up)) out.push_back(up);
  return out;
}

SignedUnknottingConstraint signed_obstruction(const IntegerSymmetricMatrix& m, const Integer& p) {
  SignedUnknottingConstraint c;
  c.p = p;
  c.base_bound = wendt_bound(m, p);
  c.parity_rule = parity_rule_for(p);
  c.delta = delta_p(m, p);
  return c;
}

long improved_bound(const IntegerSymmetricMatrix& m, const Integer& p) {
  const auto c = signed_obstruction(m, p);
  const long r = p_mod8(p);
  if (r == 1 && c.delta == -Sign{}) return c.base_bound + 1;
  if (r == 5 && c.delta != Sign::parity(c.base_bound)) return c.base_bound + 1;
  return c.base_bound;
}

LickorishReport lickorish_check(const IntegerSymmetricMatrix& m) {
  require_knot(m, "lickorish_check");
  const Integer det = det_exact(m);
  if (det == 0) throw std::invalid_argument("lickorish_check: det = 0");
  LickorishReport r;
  bool plus_ok = true, minus_ok = true;
  for (const Integer& p : prime_divisors(det)) {
    LickorishPrime lp;
    lp.d_p = d_p(m, p);
    lp.delta = delta_p(m, p);
    if (lp.d_p == 1) {
      const Sign plus{};
      const long r8 = p_mod8(p);
      auto ok = [&](Sign zeta) {
        switch (r8) {
          case 1:
            return lp.delta == plus;
          case 3:
            return lp.delta == zeta;
          case 5:
            return lp.delta == -plus;
          default:
            return lp.delta == -zeta;
        }
      };
      lp.pass_plus = ok(plus);
      lp.pass_minus = ok(-plus);
    }
    plus_ok = plus_ok && lp.pass_plus;
    minus_ok = minus_ok && lp.pass_minus;
    r.per_prime.emplace(p, lp);
  }
  if (minus_ok) r.admissible_zeta.push_back(-1);
  if (plus_ok) r.admissible_zeta.push_back(1);
  return r;
}

std::vector<int> lickorish_generator_search(const IntegerSymmetricMatrix& m) {
  require_knot(m, "lickorish_generator_search");
  const Integer det = abs(det_exact(m));
  if (det == 0) throw std::invalid_argument("lickorish_generator_search: det = 0");
  if (det > kGeneratorSearchLimit)
    throw std::invalid_argument("lickorish_generator_search: det above the search limit");
  const auto a = generator_self_linking(m, det);
  if (!a) return {};
  // Every generator is b h' with gcd(b, det) = 1, and lambda(b h', b h') =
  // b^2 a / det.
  // det <= 10^7 keeps every product below 2^64.
  const Integer sign_det = Sign::parity(Integer((det - 1) / 2)).value();
  const std::uint64_t n = det.get_ui(), av = a->get_ui();
  std::vector<int> out;
  for (int zeta : {-1, 1}) {
    const std::uint64_t target = mod_floor(2 * zeta * sign_det, det).get_ui();
    bool found = false;
    for (std::uint64_t b = 1; b <= n && !found; ++b) {
      if (std::gcd(b, n) != 1) continue;
      found = (b * b % n) * av % n == target;
    }
    if (found) out.push_back(zeta);
  }
  return out;
}

StoimenowReport stoimenow_check(const IntegerSymmetricMatrix& m) {
  require_knot(m, "stoimenow_check");
  const Integer det = abs(det_exact(m));
  if (det == 0 || det % 5 != 0) throw std::invalid_argument("stoimenow_check: det must be divisible by 5");
  if (!smith_cokernel(m.matrix()).cyclic()) throw std::invalid_argument("stoimenow_check: cokernel is not cyclic");
  StoimenowReport r;
  r.q_value = q_at_golden_link(m);
  // lambda(h, h) = +-2/det forces h to have order det, and the two signs are
  // the two values of zeta.
  r.generator_exists = !lickorish_generator_search(m).empty();
  r.predicted = r.generator_exists ? -Golden::sqrt5() : Golden::sqrt5();
  r.counterexample = r.q_value != r.predicted;
  return r;
}

Cyclotomic24 traczyk_value(const IntegerSymmetricMatrix& m, long u_minus) {
  const Integer three = 3;
  const long c = mu_of(m);
  const auto d3 = static_cast<unsigned long>(d_p(m, three));
  const Cyclotomic24 i_sqrt3 = Cyclotomic24::i() * Cyclotomic24::sqrt3();
  return Cyclotomic24(Sign::parity(u_minus).value()) * i_power(c - 1) * i_sqrt3.pow(d3);
}

std::optional<long> golden_unknotting_bound(const Golden& q, long components) {
  Golden power(1);
  for (long a = 0;; ++a) {
    const Golden sign = Golden(Sign::parity(a + components).value());
    if (q == sign * power) return a - components + 2;
    // sqrt5^a has norm (-5)^a; stop once it outgrows q.
    if (abs(power.norm()) > abs(q.norm())) return std::nullopt;
    power *= Golden::sqrt5();
  }
}

long UnknottingSequence::u_plus() const {
  long n = 0;
  for (bool b : positive) n += b ? 1 : 0;
  return n;
}

long UnknottingSequence::u_minus() const { return static_cast<long>(positive.size()) - u_plus(); }

namespace {

// Random unimodular matrix as a product of elementary moves with small
// multipliers and coordinate swaps.
IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix t = IntegerMatrix::identity(n);
  if (n < 2) return t;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (std::size_t k = 0; k < 3 * n; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    if (k % 4 == 3)
      t.swap_rows(i, j);
    else
      t.add_row(i, j, Integer(mult(rng)));
  }
  return t;
}

}  // namespace

UnknottingSequence random_unknotting_sequence(std::mt19937_64& rng, const Integer& p, long components,
                                              std::size_t steps) {
  require_odd_prime(p);
  if (components < 1) throw std::invalid_argument("random_unknotting_sequence: components must be >= 1");
  if (!p.fits_slong_p()) throw std::invalid_argument("random_unknotting_sequence: p too large");
  UnknottingSequence seq;
  seq.matrices.push_back(IntegerSymmetricMatrix::zero(static_cast<std::size_t>(components - 1)));
  std::bernoulli_distribution coin(0.5);
  const long pl = p.get_si();
  std::uniform_int_distribution<long> entry(-pl, pl);
  constexpr int kAttempts = 20000;
  for (std::size_t s = 0; s < steps; ++s) {
    const IntegerSymmetricMatrix& cur = seq.matrices.back();
    const std::size_t target = d_p(cur, p) + 1;
    bool done = false;
    for (int attempt = 0; attempt < kAttempts && !done; ++attempt) {
      // Grow the surface now and then, and always when there is no room.
      IntegerSymmetricMatrix base = cur;
      if (base.size() == 0 || coin(rng)) base = stabilize(base);
      const std::size_t n = base.size();
      // With u the last column of T^{-1}, T (base -+ 2 u u^T) T^T differs from
      // T base T^T in the last diagonal entry only. A rank drop mod p needs u
      // in the image of base mod p, so half the time u = base x + p w.
      std::vector<Integer> u(n);
      if (coin(rng)) {
        for (auto& x : u) x = entry(rng);
      } else {
        std::vector<Integer> x(n);
        for (auto& xi : x) xi = entry(rng);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = p * (static_cast<long>(rng() % 3) - 1);
          for (std::size_t j = 0; j < n; ++j) u[i] += base(i, j) * x[j];
        }
      }
      Integer g = 0;
      for (const auto& x : u) g = gcd(g, x);
      if (g != 1) continue;
      // The new matrix belongs to the more knotted link; its last entry is two
      // smaller than its partner's when the changed crossing is positive.
      const bool positive = coin(rng);
      IntegerMatrix next = base.matrix();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next(i, j) += (positive ? -2 : 2) * u[i] * u[j];
      IntegerSymmetricMatrix m(std::move(next));
      if (d_p(m, p) != target) continue;
      seq.matrices.push_back(UnimodularTransform(random_unimodular(rng, n)).congruence(m));
      seq.positive.push_back(positive);
      done = true;
    }
    if (!done) throw std::runtime_error("random_unknotting_sequence: no d_p-raising change found");
  }
  return seq;
}

SignedUnknottingConstraint constraint_at_end(const UnknottingSequence& seq, const Integer& p) {
  if (seq.matrices.empty() || seq.positive.size() + 1 != seq.matrices.size())
    throw std::invalid_argument("constraint_at_end: malformed sequence");
  const long c = mu_of(seq.matrices.front());
  for (std::size_t k = 0; k < seq.matrices.size(); ++k) {
    if (mu_of(seq.matrices[k]) != c) throw std::invalid_argument("constraint_at_end: component count changes");
    if (d_p(seq.matrices[k], p) != static_cast<std::size_t>(c - 1) + k)
      throw std::invalid_argument("constraint_at_end: step " + std::to_string(k) +
                                  " does not raise d_p by exactly one");
  }
  return signed_obstruction(seq.matrices.back(), p);
}

}  // namespace knotinv
