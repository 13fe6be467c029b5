#include <gtest/gtest.h>

#include "knotinv/corpus.hpp"
#include "knotinv/evaluate.hpp"

using namespace knotinv;

namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = load_corpus(default_corpus_dir());
  return c;
}

const LinkDiagram& diagram(const std::string& name) { return *find_entry(corpus(), name).diagram; }

}  // namespace

TEST(ParsePd, Trefoil) {
  const auto d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  EXPECT_EQ(d.size(), 3U);
  EXPECT_EQ(d.components(), 1U);
  EXPECT_EQ(std::abs(d.writhe()), 3);
  EXPECT_EQ(parse_pd(d.pd_text()).crossings(), d.crossings());
}

TEST(ParsePd, FreeLoopsAndEmpty) {
  const auto two = parse_pd("O O");
  EXPECT_EQ(two.size(), 0U);
  EXPECT_EQ(two.components(), 2U);
  const auto unknot = parse_pd("");
  EXPECT_EQ(unknot.size(), 0U);
  EXPECT_EQ(unknot.components(), 1U);
}

TEST(ParsePd, Errors) {
  EXPECT_THROW(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)"), std::invalid_argument);
  EXPECT_THROW(parse_pd("X(1,2,3)"), std::invalid_argument);
  EXPECT_THROW(parse_pd("Y(1,2,3,4)"), std::invalid_argument);
  EXPECT_THROW(parse_pd("X(1,1,1,1)"), std::invalid_argument);
}

TEST(LinkDiagram, LinkingNumbersAndProperness) {
  EXPECT_EQ(diagram("hopf_pos").linking_number(0, 1), 1);
  EXPECT_EQ(diagram("hopf_neg").linking_number(0, 1), -1);
  EXPECT_FALSE(diagram("hopf_pos").is_proper());
  EXPECT_TRUE(diagram("t2_4").is_proper());
  EXPECT_EQ(diagram("t2_4").reversed(1).linking_number(0, 1), -diagram("t2_4").linking_number(0, 1));
}

TEST(Bracket, KnownPolynomials) {
  EXPECT_EQ(jones_via_bracket(parse_pd("")), LaurentPolynomial(1));
  EXPECT_EQ(jones_via_bracket(diagram("hopf_pos")), poly({{5, -1}, {1, -1}}));
  EXPECT_EQ(jones_via_bracket(diagram("t2_4")), poly({{3, -1}, {7, -1}, {9, 1}, {11, -1}}));
  // Two-component unlink: -(t^{1/2} + t^{-1/2}).
  EXPECT_EQ(jones_via_bracket(parse_pd("O O")), poly({{1, -1}, {-1, -1}}));
}

TEST(Bracket, MirrorInvertsT) {
  for (const char* name : {"3_1", "4_1", "5_2", "t2_4", "hopf_pos"}) {
    const auto& d = diagram(name);
    EXPECT_EQ(jones_via_bracket(d.mirror()), jones_via_bracket(d).reflected()) << name;
  }
}

TEST(Bracket, ThreadCountDoesNotChangeTheResult) {
  const auto& d = diagram("9_42");
  const auto one = jones_via_bracket(d, 22, 1);
  EXPECT_EQ(jones_via_bracket(d, 22, 4), one);
  EXPECT_EQ(jones_via_bracket(d, 22, 0), one);
}

TEST(Bracket, Budget) {
  EXPECT_THROW(jones_via_bracket(diagram("9_1"), 8), std::length_error);
  EXPECT_THROW(q_via_skein(diagram("9_1"), 8), std::length_error);
}

TEST(Bracket, ReidemeisterMovesOnBraids) {
  const std::vector<int> fig8{1, -2, 1, -2};
  const auto v = jones_via_bracket(pd_from_braid(fig8, 3));
  // RII: insert sigma_2 sigma_2^{-1}.
  EXPECT_EQ(jones_via_bracket(pd_from_braid({1, 2, -2, -2, 1, -2}, 3)), v);
  // RIII: sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2.
  EXPECT_EQ(jones_via_bracket(pd_from_braid({1, 2, 1, -2, -1, -2}, 3)),
            jones_via_bracket(pd_from_braid({2, 1, 2, -2, -1, -2}, 3)));
  // RI via Markov stabilization, both signs.
  EXPECT_EQ(jones_via_bracket(pd_from_braid({1, -2, 1, -2, 3}, 4)), v);
  EXPECT_EQ(jones_via_bracket(pd_from_braid({1, -2, 1, -2, -3}, 4)), v);
  EXPECT_EQ(v, *find_entry(corpus(), "4_1").jones);
}

TEST(QSkein, UnknotAndUnlink) {
  EXPECT_EQ(q_via_skein(parse_pd("")), LaurentPolynomial(1));
  const auto two = evaluate_at_golden(q_via_skein(parse_pd("O O")));
  EXPECT_EQ(two, q_at_golden_link(IntegerSymmetricMatrix::zero(1)));
  EXPECT_EQ(two, Golden::sqrt5());
}

TEST(QSkein, MatchesTableAndIsMirrorInvariant) {
  for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1"}) {
    const auto& e = find_entry(corpus(), name);
    const auto q = q_via_skein(*e.diagram);
    ASSERT_TRUE(e.q.has_value()) << name;
    EXPECT_EQ(q, *e.q) << name;
    EXPECT_EQ(q_via_skein(e.diagram->mirror()), q) << name;
  }
}

TEST(SeifertFromDiagram, TrefoilAndHopf) {
  const auto a = seifert_matrix_from_diagram(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  EXPECT_EQ(a.size(), 2U);
  EXPECT_EQ(abs(det_exact(a.symmetrized())), 3);
  const auto h = seifert_matrix_from_diagram(diagram("hopf_pos"));
  EXPECT_EQ(h.seifert(), (IntegerMatrix{{-1}}));
  EXPECT_EQ(h.symmetrized(), (IntegerSymmetricMatrix{{-2}}));
  EXPECT_THROW(seifert_matrix_from_diagram(parse_pd("O O")), std::invalid_argument);
}

TEST(SeifertFromDiagram, SkewPartIsUnimodularForKnots) {
  for (const auto& e : corpus()) {
    if (!e.diagram || e.diagram->components() != 1 || e.crossings() == 0 || e.crossings() > 9) continue;
    const auto a = seifert_matrix_from_diagram(*e.diagram);
    const IntegerMatrix skew = a.seifert() + -a.seifert().transpose();
    EXPECT_EQ(abs(det_exact(skew)), 1) << e.name;
    if (e.det) EXPECT_EQ(abs(det_exact(a.symmetrized())), *e.det) << e.name;
    // |V(-1)| = det.
    const auto v = evaluate_half_integral(jones_via_bracket(*e.diagram), JonesPoint::MinusOne);
    EXPECT_EQ(v * v.conj(), Cyclotomic24(det_exact(a.symmetrized()) * det_exact(a.symmetrized()))) << e.name;
  }
}

TEST(Goeritz, AgreesWithSeifertOnTwentyKnots) {
  int done = 0;
  for (const auto& e : corpus()) {
    if (!e.diagram || e.diagram->components() != 1 || e.crossings() == 0) continue;
    if (++done > 20) break;
    const auto g = goeritz_from_diagram(*e.diagram);
    const auto m = seifert_matrix_from_diagram(*e.diagram).symmetrized();
    for (Integer p : {3, 5, 7, 11, 13}) EXPECT_EQ(delta_p_gl(g, p), delta_p(m, p)) << e.name << " p=" << p;
    EXPECT_EQ(abs(det_exact(g.r)), abs(det_exact(m))) << e.name;
  }
  EXPECT_EQ(done, 21);
}

TEST(Goeritz, IgnoresLinkOrientation) {
  const auto pos = goeritz_from_diagram(diagram("hopf_pos"));
  const auto neg = goeritz_from_diagram(diagram("hopf_pos").reversed(1));
  EXPECT_EQ(delta_p_gl(pos, 3), delta_p_gl(neg, 3));
  EXPECT_EQ(pos.mu, 2);
}

TEST(Braids, VogelRecoversTheLink) {
  for (const char* name : {"3_1", "4_1", "6_2", "7_4", "t2_4"}) {
    const auto& d = diagram(name);
    const auto w = braid_from_diagram(d);
    EXPECT_EQ(jones_via_bracket(pd_from_braid(w.word, w.strands)), jones_via_bracket(d)) << name;
    EXPECT_EQ(signature(seifert_matrix_from_braid(w).symmetrized()),
              signature(seifert_matrix_from_diagram(d).symmetrized()))
        << name;
  }
}

TEST(Corpus, ParsesAndRejects) {
  const auto e = parse_corpus_entry("name x\npd X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\ndet 3\n");
  EXPECT_EQ(e.name, "x");
  EXPECT_EQ(e.crossings(), 3U);
  EXPECT_EQ(*e.det, 3);
  EXPECT_THROW(parse_corpus_entry("name x\nseifert 2\n1 2\n"), std::runtime_error);
  EXPECT_THROW(parse_corpus_entry("bogus 1\n"), std::runtime_error);
  EXPECT_THROW(find_entry(corpus(), "no_such_knot"), std::out_of_range);
}

TEST(Corpus, CoversEveryKnotThroughNineCrossings) {
  // The unknot and 1 + 1 + 2 + 3 + 7 + 21 + 49 prime knots with 3, ..., 9 crossings.
  std::size_t knots = 0;
  for (const auto& e : corpus())
    if (e.diagram && e.diagram->components() == 1 && e.crossings() <= 9 && e.name.find('_') != std::string::npos &&
        std::isdigit(static_cast<unsigned char>(e.name[0])))
      ++knots;
  EXPECT_EQ(knots, 85U);
}
