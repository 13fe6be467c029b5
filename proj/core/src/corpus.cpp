#include "knotinv/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef KNOTINV_DEFAULT_CORPUS
#define KNOTINV_DEFAULT_CORPUS "data/corpus"
#endif

namespace knotinv {

namespace {

LaurentPolynomial parse_terms(std::istream& in) {
  LaurentPolynomial p;
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected exponent:coefficient, got '" + tok + "'");
    Integer c;
    if (c.set_str(tok.substr(colon + 1), 10) != 0) throw std::invalid_argument("bad coefficient in '" + tok + "'");
    p.add_term(std::stol(tok.substr(0, colon)), c);
  }
  return p;
}

IntegerMatrix read_rows(std::istream& lines, std::size_t n, int& lineno) {
  std::ostringstream buf;
  buf << n << '\n';
  std::string row;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(lines, row)) throw std::invalid_argument("matrix truncated");
    ++lineno;
    buf << row << '\n';
  }
  return parse_square_matrix(buf.str());
}

}  // namespace

std::optional<IntegerSymmetricMatrix> CorpusEntry::symmetrized() const {
  if (seifert) return seifert->symmetrized();
  return matrix;
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv(kCorpusEnv); env && *env) return env;
  return KNOTINV_DEFAULT_CORPUS;
}

CorpusEntry parse_corpus_entry(const std::string& text, const std::filesystem::path& origin) {
  CorpusEntry e;
  e.path = origin;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  try {
    while (std::getline(lines, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key) || key[0] == '#') continue;
      std::string rest;
      std::getline(ls, rest);
      rest.erase(0, std::min(rest.find_first_not_of(' '), rest.size()));
      std::istringstream rs(rest);
      if (key == "name") {
        e.name = rest;
      } else if (key == "note") {
        e.note = rest;
      } else if (key == "pd") {
        e.diagram = parse_pd(rest);
      } else if (key == "braid") {
        BraidWord b;
        for (int g; rs >> g;) {
          b.word.push_back(g);
          b.strands = std::max(b.strands, std::abs(g) + 1);
        }
        e.braid = b;
      } else if (key == "seifert" || key == "matrix") {
        std::size_t n = 0;
        if (!(rs >> n)) throw std::invalid_argument("missing matrix size");
        IntegerMatrix m = read_rows(lines, n, lineno);
        if (key == "seifert")
          e.seifert.emplace(std::move(m));
        else
          e.matrix.emplace(std::move(m));
      } else if (key == "jones") {
        e.jones = parse_terms(rs);
      } else if (key == "q") {
        e.q = parse_terms(rs);
      } else if (key == "det") {
        Integer d;
        if (d.set_str(rest, 10) != 0) throw std::invalid_argument("bad determinant");
        e.det = d;
      } else if (key == "signature") {
        e.signature = std::stol(rest);
      } else if (key == "unknotting") {
        e.unknotting = std::stol(rest);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    }
  } catch (const std::exception& ex) {
    throw std::runtime_error(origin.string() + ":" + std::to_string(lineno) + ": " + ex.what());
  }
  if (e.name.empty()) e.name = origin.stem().string();
  return e;
}

CorpusEntry load_corpus_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_entry(buf.str(), file);
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("corpus directory not found: " + dir.string());
  std::vector<CorpusEntry> out;
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    const auto ext = f.path().extension();
    if (ext == ".knot" || ext == ".link") out.push_back(load_corpus_file(f.path()));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.crossings() != b.crossings()) return a.crossings() < b.crossings();
    return a.name < b.name;
  });
  return out;
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry named " + name);
}

}  // namespace knotinv
