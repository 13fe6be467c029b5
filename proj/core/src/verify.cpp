#include "knotinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "knotinv/corpus.hpp"
#include "knotinv/evaluate.hpp"
#include "knotinv/linkform.hpp"
#include "knotinv/obstruct.hpp"

namespace knotinv {

namespace {

std::ostream& operator<<(std::ostream& os, const std::vector<unsigned>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const std::vector<int>& v) {
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << '}';
}

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    ++r_.checks;
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    r_.failures.push_back(os.str());
  }

  // Runs f, turning an exception into a failure.
  void guard(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++r_.checks;
      r_.failures.push_back(what + ": " + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

std::vector<CorpusEntry> corpus_of(const VerifyConfig& c) {
  return load_corpus(c.corpus.empty() ? default_corpus_dir() : c.corpus);
}

IntegerSymmetricMatrix random_even_symmetric(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2 * d(rng);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  }
  return IntegerSymmetricMatrix(std::move(m));
}

IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntegerMatrix t = IntegerMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) t(0, 0) = -1;
    return t;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (std::size_t k = 0; k < 4 * n; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i != j) t.add_row(i, j, Integer(mult(rng)));
    if (k % 5 == 0) t.swap_rows(i, j);
  }
  if (rng() % 2) t.add_row(0, 0, Integer(-2));  // negate row 0
  return t;
}

Cyclotomic24 at(const LaurentPolynomial& v, JonesPoint p) { return evaluate_half_integral(v, p); }

// ---------------------------------------------------------------- examples

void suite_examples(Checker& ck, const VerifyConfig& cfg) {
  const Integer p3 = 3, p5 = 5, p7 = 7, p13 = 13, p17 = 17;

  {
    const IntegerSymmetricMatrix m{{0, 7}, {7, 0}};
    ck.expect_eq(d_p(m, p7), std::size_t{2}, "P(7,-7,7) d_7");
    ck.expect_eq(wendt_bound(m, p7), 2L, "P(7,-7,7) Wendt bound at p = 7");
    ck.expect_eq(delta_p(m, p7), Sign{}, "P(7,-7,7) delta_7");
    ck.expect_eq(improved_bound(m, p7), 2L, "P(7,-7,7) improved bound at p = 7");
  }
  {
    const IntegerSymmetricMatrix m{{0, 17, 0, 0}, {17, 0, 0, 0}, {0, 0, 6, 3}, {0, 0, 3, 10}};
    ck.expect_eq(d_p(m, p17), std::size_t{3}, "4x4 example d_17");
    ck.expect_eq(delta_p(m, p17), -Sign{}, "4x4 example delta_17");
    ck.expect_eq(wendt_bound(m, p17), 3L, "4x4 example Wendt bound");
    ck.expect_eq(improved_bound(m, p17), 4L, "4x4 example improved bound");
  }
  {
    const IntegerSymmetricMatrix m{{-2, 0, -1, 0}, {0, -6, 9, 3}, {-1, 9, -8, -3}, {0, 3, -3, 0}};
    const std::vector<unsigned> k{0, 1, 1, 2};
    ck.expect_eq(smith_cokernel(m.matrix()).exponents(p3), k, "12n553 cokernel exponents at 3");
    ck.guard("12n553 normal form", [&] {
      const auto nf = inverse_ord_normalize(m, p3);
      ck.expect_eq(nf.exponents, k, "12n553 normal-form exponents");
      ck.expect(nf.transform.congruence(m) == nf.conjugate, "12n553 T M T^T");
      ck.expect(inverse_rational(nf.conjugate.matrix()) == nf.conjugate_inverse.matrix(), "12n553 inverse");
      bool ok = true;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const auto inv = ord_p(nf.conjugate_inverse(i, j), p3);
          const auto ent = ord_p(nf.conjugate(i, j), p3);
          if (i == j) {
            ok = ok && inv == -static_cast<long>(k[i]) && ent >= static_cast<long>(k[i]);
          } else {
            ok = ok && inv >= 0L && ent >= static_cast<long>(k[i] + k[j]);
          }
        }
      ck.expect(ok, "12n553 ord_3 conditions");
    });
    // The matrices printed alongside the example.
    const IntegerSymmetricMatrix tmt{{-2, 0, -3, 0}, {0, -6, 9, 27}, {-3, 9, -12, -27}, {0, 27, -27, -90}};
    const RationalMatrix inv = inverse_rational(tmt.matrix());
    const RationalMatrix want{{10, 3, -7, 3},
                              {3, Rational(4, 3), -2, 1},
                              {-7, -2, Rational(14, 3), -2},
                              {3, 1, -2, Rational(8, 9)}};
    ck.expect(inv == want, "12n553 printed (T M T^T)^{-1}");
    ck.expect_eq(abs(det_exact(tmt)), abs(det_exact(m)), "12n553 printed T M T^T determinant");
    ck.expect_eq(smith_cokernel(tmt.matrix()).exponents(p3), k, "12n553 printed T M T^T cokernel");
  }
  {
    const IntegerSymmetricMatrix m{{22, 17}, {17, 22}};
    ck.expect_eq(abs(det_exact(m)), Integer(195), "P(5,17,5) det");
    ck.expect_eq(delta_p(m, p5), -Sign{}, "P(5,17,5) delta_5");
    ck.expect_eq(delta_p(m, p13), Sign{}, "P(5,17,5) delta_13");
    ck.expect_eq(q_at_golden_link(m), -Golden::sqrt5(), "P(5,17,5) Q value");
    ck.expect_eq(lickorish_check(m).admissible_zeta, std::vector<int>{}, "P(5,17,5) Lickorish pattern");
    ck.expect_eq(lickorish_generator_search(m), std::vector<int>{}, "P(5,17,5) generator search");
    const auto s = stoimenow_check(m);
    ck.expect(s.counterexample && !s.generator_exists, "P(5,17,5) is a counterexample to the conjecture");
  }

  const auto corpus = corpus_of(cfg);
  for (const char* name : {"12a_628", "12a_665", "12a_828", "12a_1044"}) {
    const std::string n = name;
    ck.guard(n, [&] {
      const auto m = *find_entry(corpus, n).symmetrized();
      ck.expect_eq(abs(det_exact(m)), Integer(195), n + " det");
      ck.expect_eq(delta_p(m, p5), -Sign{}, n + " delta_5");
      ck.expect_eq(delta_p(m, p13), Sign{}, n + " delta_13");
      const auto s = stoimenow_check(m);
      ck.expect(s.counterexample && s.q_value == -Golden::sqrt5(), n + " is a counterexample to the conjecture");
    });
  }

  // Hopf links and T(2,4) with both orientations.
  struct LinkCase {
    const char* name;
    LaurentPolynomial jones;
    Cyclotomic24 at_minus_one, at_i, at_zeta6;
  };
  auto poly = [](std::initializer_list<std::pair<long, long>> t) {
    LaurentPolynomial p;
    for (auto [e, c] : t) p.add_term(e, c);
    return p;
  };
  const Cyclotomic24 i = Cyclotomic24::i();
  const std::vector<LinkCase> cases{
      {"hopf_pos", poly({{5, -1}, {1, -1}}), -2 * i, 0, -i},
      {"hopf_neg", poly({{-5, -1}, {-1, -1}}), 2 * i, 0, i},
      {"t2_4", poly({{3, -1}, {7, -1}, {9, 1}, {11, -1}}), {}, Cyclotomic24::sqrt2(), {}},
      {"t2_4_rev", poly({{-9, -1}, {-5, -1}, {-3, 1}, {-1, -1}}), {}, -Cyclotomic24::sqrt2(), {}},
  };
  for (const auto& c : cases) {
    const std::string n = c.name;
    ck.guard(n, [&] {
      const auto& e = find_entry(corpus, n);
      const LaurentPolynomial v = jones_via_bracket(*e.diagram, cfg.bracket_budget, cfg.threads);
      ck.expect_eq(v, c.jones, n + " Jones polynomial");
      ck.expect_eq(at(v, JonesPoint::I), c.at_i, n + " V(i)");
      const SeifertData a = seifert_matrix_from_diagram(*e.diagram);
      const auto b = classical_invariants(a, {p3});
      const auto sv = jones_special_values(b, b.delta_p.at(p3), b.arf_sign);
      ck.expect_eq(sv.at_i, c.at_i, n + " V(i) from the Seifert matrix");
      if (n.rfind("hopf", 0) == 0) {
        ck.expect_eq(at(v, JonesPoint::MinusOne), c.at_minus_one, n + " V(-1)");
        ck.expect_eq(at(v, JonesPoint::Zeta6), c.at_zeta6, n + " V(zeta_6)");
        ck.expect_eq(sv.at_minus_one, c.at_minus_one, n + " V(-1) from the Seifert matrix");
        ck.expect_eq(sv.at_zeta6, c.at_zeta6, n + " V(zeta_6) from the Seifert matrix");
        const Integer m00 = a.symmetrized()(0, 0);
        ck.expect(a.size() == 1 && m00 == (n == "hopf_pos" ? -2 : 2), n + " M = (-+2)");
      }
    });
  }
}

// ------------------------------------------------------------------ closed_forms

void suite_prop35(Checker& ck, const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  constexpr int kMatrices = 600;
  int made = 0;
  while (made < kMatrices) {
    const std::size_t g = 1 + made % 3;
    const auto m = random_even_symmetric(rng, 2 * g, 6);
    const Integer det = det_exact(m);
    if (det == 0 || mpz_even_p(det.get_mpz_t())) continue;
    ++made;
    ck.guard("closed_forms", [&] {
      const WallDecomposition w = wall_decompose(LinkingFormPresentation(m));
      for (const Integer& p : cfg.primes) {
        std::ostringstream what;
        what << "delta_" << p << " of " << m.matrix();
        ck.expect_eq(delta_p_from_linking_form(w, det, d_p(m, p), p), delta_p(m, p), what.str());
      }
    });
  }
}

// ------------------------------------------------------------------- zeta6

void suite_thm11(Checker& ck, const VerifyConfig& cfg) {
  const Integer three = 3;
  for (const auto& e : corpus_of(cfg)) {
    if (!e.diagram || e.diagram->components() != 1 || e.crossings() == 0 || e.crossings() > 9) continue;
    ck.guard(e.name, [&] {
      const SeifertData a = seifert_matrix_from_diagram(*e.diagram);
      const auto& m = a.symmetrized();
      const Integer det = abs(det_exact(m));
      const WallDecomposition w = wall_decompose(LinkingFormPresentation(m));
      const Cyclotomic24 closed = jones_at_zeta6_knot(det, d_p(m, three), wall_parity(w, three));
      const LaurentPolynomial v = jones_via_bracket(*e.diagram, cfg.bracket_budget, cfg.threads);
      ck.expect_eq(at(v, JonesPoint::Zeta6), closed, e.name + " V(zeta_6)");
    });
  }
}

// ------------------------------------------------------------------- golden

void suite_thm42(Checker& ck, const VerifyConfig& cfg) {
  const Integer five = 5;
  for (const auto& e : corpus_of(cfg)) {
    if (!e.diagram || e.diagram->components() != 1 || e.crossings() == 0 || e.crossings() > 8) continue;
    ck.guard(e.name, [&] {
      const SeifertData a = seifert_matrix_from_diagram(*e.diagram);
      const auto& m = a.symmetrized();
      const Integer det = abs(det_exact(m));
      const WallDecomposition w = wall_decompose(LinkingFormPresentation(m));
      const Golden q = evaluate_at_golden(q_via_skein(*e.diagram, cfg.q_budget));
      ck.expect_eq(q, q_at_golden(det, d_p(m, five), wall_parity(w, five)), e.name + " Q(golden) closed form");
      ck.expect_eq(q, q_at_golden_link(m), e.name + " Q(golden) from delta_5");
    });
  }
}

// -------------------------------------------------------------- invariance

void suite_jacobi(Checker& ck, const VerifyConfig& cfg, int count) {
  std::mt19937_64 rng(cfg.seed ^ 0x4a41434fULL);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int made = 0;
  while (made < count) {
    const std::size_t n = 2 + made % 4;
    RationalMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        r(i, j) = r(j, i) = x;
      }
    if (det_rational(r) == 0) continue;
    ++made;
    const std::size_t k = 1 + rng() % n;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> rows(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> cols(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    ck.guard("jacobi", [&] {
      const auto s = jacobi_minor_identity(RationalSymmetricMatrix(r), rows, cols);
      ck.expect_eq(s.lhs, s.rhs, "Jacobi identity");
    });
  }
}

void suite_invariance(Checker& ck, const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x494e5641ULL);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto m = random_even_symmetric(rng, n, 5);
    const UnimodularTransform u(random_unimodular(rng, n));
    const auto m2 = u.congruence(m);
    const auto ms = stabilize(m);
    std::mt19937_64 r1(rng()), r2(rng());
    for (const Integer& p : cfg.primes) {
      const Sign d = delta_p(m, p);
      std::ostringstream what;
      what << " of " << m.matrix() << " at p = " << p;
      ck.expect_eq(delta_p(m2, p), d, "unimodular congruence" + what.str());
      ck.expect_eq(delta_p(ms, p), d, "stabilization" + what.str());
      ck.expect_eq(delta_p(m, p, &r1), d, "randomized reduction 1" + what.str());
      ck.expect_eq(delta_p(m, p, &r2), d, "randomized reduction 2" + what.str());
    }
  }
  suite_jacobi(ck, cfg, 1000);
  std::uniform_int_distribution<int> ent(-4, 4);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    IntegerMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = ent(rng);
    const SeifertData s(std::move(a));
    const Cyclotomic24 want = i_power(-signature(s.symmetrized())) * Cyclotomic24(abs(det_exact(s.symmetrized())));
    std::ostringstream what;
    what << "Delta(-1) of " << s.seifert();
    ck.expect_eq(alexander_at_minus1(s), want, what.str());
    ck.expect_eq(at(alexander_poly(s), JonesPoint::MinusOne), want, what.str() + " via the polynomial");
  }
}

// ------------------------------------------------------------------- sequences

void suite_thm12(Checker& ck, const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x544d3132ULL);
  // Covers every residue mod 8: 17 = 1, 3 = 11 = 3, 5 = 13 = 5, 7 = 7.
  const std::vector<Integer> primes{3, 5, 7, 11, 13, 17};
  // Runs where swapping u+ and u- breaks the rule; none would mean the sign
  // bookkeeping is never exercised.
  int sensitive = 0;
  for (int t = 0; t < 200; ++t) {
    const Integer& p = primes[static_cast<std::size_t>(t) % primes.size()];
    const long c = 1 + (t / 6) % 3;
    const std::size_t steps = 1 + static_cast<std::size_t>(t / 18) % 3;
    ck.guard("sequences", [&] {
      const auto seq = random_unknotting_sequence(rng, p, c, steps);
      const auto con = constraint_at_end(seq, p);
      std::ostringstream what;
      what << "p = " << p << ", c = " << c << ", u+ = " << seq.u_plus() << ", u- = " << seq.u_minus()
           << ", delta = " << con.delta << ", M = " << seq.matrices.back().matrix();
      ck.expect_eq(con.base_bound, static_cast<long>(steps), "bound " + what.str());
      ck.expect(con.allows(seq.u_plus(), seq.u_minus()), "sign rule " + what.str());
      if (!con.allows(seq.u_minus(), seq.u_plus())) ++sensitive;
    });
  }
  ck.expect(sensitive > 0, "no sequence distinguishes u+ from u-");
}

// --------------------------------------------------------------- lickorish

void suite_lickorish(Checker& ck, const VerifyConfig& cfg) {
  constexpr long kMaxDet = 2000;
  auto compare = [&](const IntegerSymmetricMatrix& m) {
    ck.guard("lickorish", [&] {
      std::ostringstream what;
      what << "Lickorish (i) vs (ii) for " << m.matrix();
      ck.expect_eq(lickorish_generator_search(m), lickorish_check(m).admissible_zeta, what.str());
    });
  };
  // Every 2x2 even matrix in a box, up to the symmetry a <-> c.
  for (long a = -8; a <= 8; ++a)
    for (long c = a; c <= 8; ++c)
      for (long b = 0; b <= 45; ++b) {
        const long det = 4 * a * c - b * b;
        if (det == 0 || det % 2 == 0 || std::labs(det) > kMaxDet) continue;
        compare(IntegerSymmetricMatrix{{2 * a, b}, {b, 2 * c}});
      }
  // And random 4x4 ones, cyclic or not.
  std::mt19937_64 rng(cfg.seed ^ 0x4c49434bULL);
  int made = 0;
  while (made < 400) {
    const auto m = random_even_symmetric(rng, 4, 3);
    const Integer det = abs(det_exact(m));
    if (det == 0 || mpz_even_p(det.get_mpz_t()) || det > kMaxDet) continue;
    ++made;
    compare(m);
  }
}

// ---------------------------------------------------------------- diagrams

void suite_diagrams(Checker& ck, const VerifyConfig& cfg) {
  const Integer three = 3;
  std::mt19937_64 rng(cfg.seed ^ 0x44494147ULL);
  for (const auto& e : corpus_of(cfg)) {
    if (!e.diagram) continue;
    const LinkDiagram& d = *e.diagram;
    ck.guard(e.name, [&] {
      const bool small = d.size() <= cfg.bracket_budget;
      LaurentPolynomial v;
      if (small) {
        v = jones_via_bracket(d, cfg.bracket_budget, cfg.threads);
        if (e.jones) ck.expect_eq(v, *e.jones, e.name + " Jones polynomial vs table");
      }
      if (e.q && d.size() <= 10) ck.expect_eq(q_via_skein(d, cfg.q_budget), *e.q, e.name + " Q polynomial vs table");
      if (d.size() == 0 || d.free_loops() > 0) return;

      const SeifertData a = seifert_matrix_from_diagram(d);
      const auto& m = a.symmetrized();
      if (e.seifert) {
        ck.expect_eq(alexander_poly(a), alexander_poly(*e.seifert), e.name + " Alexander polynomial vs table");
        ck.expect_eq(signature(m), signature(e.seifert->symmetrized()), e.name + " signature vs table");
      }
      if (e.signature) ck.expect_eq(signature(m), *e.signature, e.name + " signature");
      if (e.det) ck.expect_eq(abs(det_exact(m)), *e.det, e.name + " determinant");
      if (small) {
        const auto b = classical_invariants(a, {three});
        const auto sv = jones_special_values(b, b.delta_p.at(three), b.arf_sign);
        ck.expect_eq(at(v, JonesPoint::One), sv.at_one, e.name + " V(1)");
        ck.expect_eq(at(v, JonesPoint::MinusOne), sv.at_minus_one, e.name + " V(-1)");
        ck.expect_eq(at(v, JonesPoint::Zeta3), sv.at_zeta3, e.name + " V(zeta_3)");
        ck.expect_eq(at(v, JonesPoint::I), sv.at_i, e.name + " V(i)");
        ck.expect_eq(at(v, JonesPoint::Zeta6), sv.at_zeta6, e.name + " V(zeta_6)");
      }
      if (d.components() == 1) {
        const SpanningSurfaceData g = goeritz_from_diagram(d);
        for (const Integer& p : cfg.primes)
          ck.expect_eq(delta_p_gl(g, p), delta_p(m, p), e.name + " delta_" + p.get_str() + " from the Goeritz matrix");
      }
      // Braid routes: Vogel's algorithm on the diagram, and the tabulated word
      // under Markov moves, RII insertions and conjugation.
      const BraidWord w = braid_from_diagram(d);
      if (w.word.size() <= 20 && small)
        ck.expect_eq(jones_via_bracket(pd_from_braid(w.word, w.strands), cfg.bracket_budget, cfg.threads), v,
                     e.name + " Jones polynomial of the Vogel braid");
      ck.expect_eq(signature(seifert_matrix_from_braid(w).symmetrized()), signature(m), e.name + " Vogel braid signature");
      if (e.braid && small && e.braid->word.size() + 2 <= cfg.bracket_budget) {
        std::vector<int> word = e.braid->word;
        int strands = e.braid->strands;
        ck.expect_eq(jones_via_bracket(pd_from_braid(word, strands), cfg.bracket_budget, cfg.threads), v,
                     e.name + " Jones polynomial of the tabulated braid");
        std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(rng() % word.size()), word.end());
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, strands - 1)));
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(rng() % (word.size() + 1)), {g, -g});
        word.push_back(rng() % 2 ? strands : -strands);
        ++strands;
        ck.expect_eq(jones_via_bracket(pd_from_braid(word, strands), cfg.bracket_budget, cfg.threads), v,
                     e.name + " Jones polynomial after braid moves");
      }
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"examples", "closed_forms", "zeta6",     "golden",   "invariance",
                                              "jacobi",   "sequences",  "lickorish", "diagrams"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  SuiteResult r;
  r.name = name;
  Checker ck(r);
  const auto start = std::chrono::steady_clock::now();
  if (name == "examples")
    suite_examples(ck, config);
  else if (name == "closed_forms")
    suite_prop35(ck, config);
  else if (name == "zeta6")
    suite_thm11(ck, config);
  else if (name == "golden")
    suite_thm42(ck, config);
  else if (name == "invariance")
    suite_invariance(ck, config);
  else if (name == "jacobi")
    suite_jacobi(ck, config, 1000);
  else if (name == "sequences")
    suite_thm12(ck, config);
  else if (name == "lickorish")
    suite_lickorish(ck, config);
  else if (name == "diagrams")
    suite_diagrams(ck, config);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace knotinv
