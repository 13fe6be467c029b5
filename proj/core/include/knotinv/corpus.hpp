#pragma once

// Bundled knot and link data. One file per link (*.knot or *.link) holding
// keyword lines:
//
//   name <id>            note <free text>
//   pd <PD text>         braid <generators>
//   seifert <n> + n rows (unsymmetrized Seifert matrix)
//   matrix <n> + n rows  (symmetrized Seifert matrix, when A is not known)
//   jones <e:c ...>      exponents in units of t^{1/2}
//   q <e:c ...>          powers of z
//   det <n>  signature <n>  unknotting <n>
//
// Reference polynomials and numbers come from public tables and are only
// ever compared against, never used as inputs to a computation.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "knotinv/diagram.hpp"

namespace knotinv {

struct CorpusEntry {
  std::string name;
  std::string note;
  std::filesystem::path path;
  std::optional<LinkDiagram> diagram;
  std::optional<BraidWord> braid;
  std::optional<SeifertData> seifert;
  std::optional<IntegerSymmetricMatrix> matrix;
  std::optional<LaurentPolynomial> jones;
  std::optional<LaurentPolynomial> q;
  std::optional<Integer> det;
  std::optional<long> signature;
  std::optional<long> unknotting;

  /// Crossings of the PD diagram, if any.
  std::size_t crossings() const { return diagram ? diagram->size() : 0; }
  /// The symmetrized Seifert matrix, from `seifert` or `matrix`.
  std::optional<IntegerSymmetricMatrix> symmetrized() const;
};

/// Environment variable that overrides the corpus directory.
inline constexpr const char* kCorpusEnv = "KNOTINV_CORPUS";

/// $KNOTINV_CORPUS if set, else the directory baked in at build time.
std::filesystem::path default_corpus_dir();

/// Throws std::runtime_error with the file name and line on malformed input.
CorpusEntry parse_corpus_entry(const std::string& text, const std::filesystem::path& origin = {});
CorpusEntry load_corpus_file(const std::filesystem::path& file);

/// All entries of a directory, ordered by crossing count and then name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

/// Entry by name; throws std::out_of_range if absent.
const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name);

}  // namespace knotinv
