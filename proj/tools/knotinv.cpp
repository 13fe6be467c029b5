// knotinv: invariants, unknotting obstructions and verification suites from
// the command line.
//
//   knotinv invariants <input>...   det, signature, d_p, delta_p, Wall form,
//                                   Jones special values, Q at the golden point
//   knotinv obstruct <input>...     Wendt and signed bounds, Lickorish,
//                                   Stoimenow
//   knotinv verify [suite]...       property suites, all by default
//
// An input is a matrix file ("n" then n rows), a PD file, a corpus file
// (*.knot, *.link) or the name of a corpus entry.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "knotinv/corpus.hpp"
#include "knotinv/evaluate.hpp"
#include "knotinv/linkform.hpp"
#include "knotinv/obstruct.hpp"
#include "knotinv/verify.hpp"

namespace fs = std::filesystem;
using namespace knotinv;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<long> primes{3, 5, 7, 11, 13};
  std::string format = "text";
  std::size_t budget = 16;
  std::uint64_t seed = VerifyConfig{}.seed;
  std::string corpus;
  bool seifert = false;  // read square matrices as unsymmetrized
  unsigned threads = 0;

  std::vector<Integer> prime_list() const { return {primes.begin(), primes.end()}; }
  fs::path corpus_dir() const { return corpus.empty() ? default_corpus_dir() : fs::path(corpus); }
};

// Ordered key/value lines, printed as "key = value" or "key=value".
class Report {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  template <class T>
  void add(std::string key, const T& value) {
    std::ostringstream os;
    os << value;
    add(std::move(key), os.str());
  }

  void print(std::ostream& out, bool machine) const {
    for (const auto& [k, v] : lines_) out << k << (machine ? "=" : " = ") << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Input {
  std::string label;
  std::string source;
  std::optional<LinkDiagram> diagram;
  std::optional<SeifertData> seifert;
  IntegerSymmetricMatrix m;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_pd(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first == std::string::npos || text[first] == 'X' || text[first] == 'O';
}

bool even_diagonal(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (mpz_odd_p(m(i, i).get_mpz_t())) return false;
  return true;
}

// Seifert matrix of a diagram; crossingless loops add zero rows.
SeifertData seifert_of(const LinkDiagram& d) {
  if (d.size() == 0) return SeifertData(IntegerMatrix(d.components() - 1, d.components() - 1));
  if (d.free_loops() == 0) return seifert_matrix_from_diagram(d);
  const SeifertData core = seifert_matrix_from_diagram(LinkDiagram::from_pd(d.crossings()));
  const std::size_t n = core.size(), k = d.free_loops();
  IntegerMatrix a(n + k, n + k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = core.seifert()(i, j);
  return SeifertData(std::move(a));
}

void finish_from_entry(Input& in, const CorpusEntry& e) {
  in.diagram = e.diagram;
  if (e.seifert) {
    in.seifert = e.seifert;
  } else if (!e.matrix && e.diagram) {
    in.seifert = seifert_of(*e.diagram);
  }
  if (in.seifert)
    in.m = in.seifert->symmetrized();
  else if (e.matrix)
    in.m = *e.matrix;
  else
    throw std::runtime_error(in.label + ": entry has neither a matrix nor a diagram");
}

Input load_input(const std::string& arg, const RunConfig& cfg) {
  Input in;
  in.label = arg;
  const fs::path path(arg);
  if (fs::is_regular_file(path)) {
    const auto ext = path.extension();
    if (ext == ".knot" || ext == ".link") {
      in.source = "corpus-file";
      finish_from_entry(in, load_corpus_file(path));
      return in;
    }
    const std::string text = slurp(path);
    if (looks_like_pd(text)) {
      in.source = "pd";
      in.diagram = parse_pd(text);
      in.seifert = seifert_of(*in.diagram);
      in.m = in.seifert->symmetrized();
      return in;
    }
    IntegerMatrix a = parse_square_matrix(text);
    if (!cfg.seifert && a.is_symmetric() && even_diagonal(a)) {
      in.source = "symmetrized-matrix";
      in.m = IntegerSymmetricMatrix(std::move(a));
    } else {
      in.source = "seifert-matrix";
      in.seifert.emplace(std::move(a));
      in.m = in.seifert->symmetrized();
    }
    return in;
  }
  const auto corpus = load_corpus(cfg.corpus_dir());
  for (const auto& e : corpus)
    if (e.name == arg) {
      in.source = "corpus";
      finish_from_entry(in, e);
      return in;
    }
  throw std::runtime_error("no such file or corpus entry: " + arg);
}

std::string wall_text(const WallDecomposition& w) {
  if (w.summands().empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.summands().size(); ++i) {
    const auto& s = w.summands()[i];
    os << (i ? " + " : "") << (s.type == WallType::A ? "A_" : "B_") << s.p;
    if (s.k > 1) os << '^' << s.k;
  }
  return os.str();
}

std::string splits_text(const SignedUnknottingConstraint& c) {
  std::ostringstream os;
  const auto ups = c.allowed_u_plus();
  os << '{';
  for (std::size_t i = 0; i < ups.size(); ++i) os << (i ? "," : "") << '(' << ups[i] << ',' << c.base_bound - ups[i] << ')';
  return os.str() + '}';
}

void report_invariants(const Input& in, const RunConfig& cfg, Report& r) {
  const Integer three = 3;
  auto primes = cfg.prime_list();
  if (std::find(primes.begin(), primes.end(), three) == primes.end()) primes.push_back(three);
  const LinkInvariantBundle b = in.seifert ? classical_invariants(*in.seifert, primes) : classical_invariants(in.m, primes);
  r.add("input", in.label);
  r.add("source", in.source);
  if (in.diagram) r.add("crossings", in.diagram->size());
  r.add("size", in.m.size());
  r.add("components", b.components);
  r.add("det", b.det);
  r.add("signature", b.sigma);
  for (const auto& p : cfg.prime_list()) {
    r.add("d_" + p.get_str(), b.d_p.at(p));
    r.add("delta_" + p.get_str(), b.delta_p.at(p));
  }
  if (b.det != 0 && mpz_odd_p(b.det.get_mpz_t()))
    r.add("wall", wall_text(wall_decompose(LinkingFormPresentation(in.m))));
  else
    r.add("wall", "n/a (det even or zero)");
  if (b.arf_sign) r.add("arf", b.arf_sign->positive() ? 0 : 1);

  // V(i) needs the Arf invariant, which M alone does not give for links.
  const bool arf_known = b.components == 1 || in.seifert.has_value();
  const auto sv = jones_special_values(b, b.delta_p.at(three), b.arf_sign);
  r.add("V(1)", sv.at_one.str());
  r.add("V(-1)", sv.at_minus_one.str());
  r.add("V(zeta_3)", sv.at_zeta3.str());
  r.add("V(i)", arf_known ? sv.at_i.str() : std::string("unknown (needs an unsymmetrized Seifert matrix)"));
  r.add("V(zeta_6)", sv.at_zeta6.str());
  const Golden q = q_at_golden_link(in.m);
  r.add("Q(golden)", q.str());

  if (!in.diagram) return;
  const LinkDiagram& d = *in.diagram;
  if (d.size() > cfg.budget) {
    r.add("diagram", "over the crossing budget of " + std::to_string(cfg.budget) + "; polynomials skipped");
    return;
  }
  const LaurentPolynomial v = jones_via_bracket(d, cfg.budget, cfg.threads);
  r.add("jones", v.str("t", true));
  const bool jones_ok = evaluate_half_integral(v, JonesPoint::One) == sv.at_one &&
                        evaluate_half_integral(v, JonesPoint::MinusOne) == sv.at_minus_one &&
                        evaluate_half_integral(v, JonesPoint::Zeta3) == sv.at_zeta3 &&
                        (!arf_known || evaluate_half_integral(v, JonesPoint::I) == sv.at_i) &&
                        evaluate_half_integral(v, JonesPoint::Zeta6) == sv.at_zeta6;
  r.add("jones_matches_matrix_route", jones_ok ? "yes" : "NO");
  const LaurentPolynomial qp = q_via_skein(d, cfg.budget);
  r.add("Q", qp.str("z", false));
  r.add("Q_matches_matrix_route", evaluate_at_golden(qp) == q ? "yes" : "NO");
}

void report_obstruct(const Input& in, const RunConfig& cfg, Report& r) {
  const IntegerSymmetricMatrix& m = in.m;
  const long c = mu_of(m);
  const Integer det = abs(det_exact(m));
  r.add("input", in.label);
  r.add("components", c);
  r.add("det", det);
  long best = 0;
  for (const auto& p : cfg.prime_list()) {
    const std::string tag = "p" + p.get_str() + ".";
    const auto con = signed_obstruction(m, p);
    const long imp = improved_bound(m, p);
    best = std::max(best, imp);
    r.add(tag + "wendt", con.base_bound > 0 ? "u >= " + std::to_string(con.base_bound) : std::string("vacuous"));
    r.add(tag + "rule", to_string(con.parity_rule));
    r.add(tag + "delta", con.delta);
    if (con.base_bound <= 0) continue;
    r.add(tag + "splits_at_bound", splits_text(con));
    if (imp > con.base_bound) {
      r.add(tag + "bound", "u >= " + std::to_string(imp));
    } else if (con.base_bound == 2) {
      const auto ups = con.allowed_u_plus();
      if (ups == std::vector<long>{1})
        r.add(tag + "bound", "opposite-sign changes required at u = 2");
      else if (ups == std::vector<long>{0, 2})
        r.add(tag + "bound", "same-sign changes required at u = 2");
      else
        r.add(tag + "bound", "u >= 2");
    } else {
      r.add(tag + "bound", "u >= " + std::to_string(con.base_bound));
    }
  }
  r.add("best_bound", best > 0 ? "u >= " + std::to_string(best) : std::string("vacuous"));

  const Golden q = q_at_golden_link(m);
  if (const auto g = golden_unknotting_bound(q, c); g && *g > 0)
    r.add("golden_bound", "u >= " + std::to_string(*g) + " (Q(golden) = " + q.str() + ")");

  if (c != 1 || det == 0) return;
  const auto lk = lickorish_check(m);
  std::ostringstream z;
  for (std::size_t i = 0; i < lk.admissible_zeta.size(); ++i) z << (i ? "," : "") << (lk.admissible_zeta[i] > 0 ? "+1" : "-1");
  r.add("lickorish_zeta", lk.admissible_zeta.empty() ? std::string("none") : z.str());
  if (lk.admissible_zeta.empty()) r.add("lickorish", "no admissible generator (u = 1 is excluded)");
  if (det <= kGeneratorSearchLimit) {
    const auto search = lickorish_generator_search(m);
    r.add("lickorish_search_agrees", search == lk.admissible_zeta ? "yes" : "NO");
  }
  if (det % 5 == 0 && smith_cokernel(m.matrix()).cyclic() && det <= kGeneratorSearchLimit) {
    const auto s = stoimenow_check(m);
    r.add("stoimenow_Q", s.q_value.str());
    r.add("stoimenow_generator", s.generator_exists ? "exists" : "none");
    r.add("stoimenow", s.counterexample ? "counterexample (conjecture predicts " + s.predicted.str() + ")"
                                         : std::string("agrees"));
  }
}

int run_inputs(const RunConfig& cfg, void (*fill)(const Input&, const RunConfig&, Report&)) {
  const bool machine = cfg.format == "machine";
  int status = 0;
  for (std::size_t i = 0; i < cfg.inputs.size(); ++i) {
    if (i && !machine) std::cout << '\n';
    try {
      Report r;
      fill(load_input(cfg.inputs[i], cfg), cfg, r);
      r.print(std::cout, machine);
    } catch (const std::exception& e) {
      std::cerr << "knotinv: " << cfg.inputs[i] << ": " << e.what() << '\n';
      status = 2;
    }
  }
  return status;
}

int run_verify(const RunConfig& cfg) {
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.corpus = cfg.corpus;
  vc.primes = cfg.prime_list();
  vc.bracket_budget = std::max<std::size_t>(cfg.budget, 22);
  vc.q_budget = cfg.budget;
  vc.threads = cfg.threads;
  std::vector<std::string> suites = cfg.inputs;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  const bool machine = cfg.format == "machine";
  int status = 0;
  for (const auto& s : suites) {
    const SuiteResult r = run_suite(s, vc);
    if (machine) {
      std::cout << "suite=" << r.name << " checks=" << r.checks << " failures=" << r.failures.size()
                << " status=" << (r.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& f : r.failures) std::cout << "failure=" << r.name << ": " << f << '\n';
    } else {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures.size()
                << " failures, " << r.seconds << " s\n";
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    }
    if (!r.passed()) status = 1;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot and link invariants from Seifert matrices and diagrams"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.primes, "Odd primes (repeat or comma-separate)")->delimiter(',');
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--budget", cfg.budget, "Crossing budget for diagram polynomials")->check(CLI::NonNegativeNumber);
    sub->add_option("--corpus", cfg.corpus, "Corpus directory (default $" + std::string(kCorpusEnv) + ")");
    sub->add_option("--threads", cfg.threads, "Bracket worker threads, 0 = hardware");
  };

  auto* inv = app.add_subcommand("invariants", "Classical invariants and special values");
  inv->add_option("inputs", cfg.inputs, "Matrix, PD or corpus files, or corpus names")->required();
  inv->add_flag("--seifert", cfg.seifert, "Read square matrices as unsymmetrized Seifert matrices");
  common(inv);

  auto* obs = app.add_subcommand("obstruct", "Unknotting-number obstructions");
  obs->add_option("inputs", cfg.inputs, "Matrix, PD or corpus files, or corpus names")->required();
  obs->add_flag("--seifert", cfg.seifert, "Read square matrices as unsymmetrized Seifert matrices");
  common(obs);

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("suites", cfg.inputs, "Suite names, or all");
  ver->add_option("--seed", cfg.seed, "Seed for the randomized suites");
  common(ver);

  CLI11_PARSE(app, argc, argv);

  for (long p : cfg.primes)
    if (p < 3 || !is_prime(Integer(p))) {
      std::cerr << "knotinv: --prime " << p << " is not an odd prime\n";
      return 2;
    }
  try {
    if (inv->parsed()) return run_inputs(cfg, report_invariants);
    if (obs->parsed()) return run_inputs(cfg, report_obstruct);
    return run_verify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "knotinv: " << e.what() << '\n';
    return 2;
  }
}
