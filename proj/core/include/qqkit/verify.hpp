#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qqkit/latex.hpp"
#include "qqkit/monomial.hpp"
#include "qqkit/quiver.hpp"

namespace qq {

// What a fixture compares against its LaTeX transcription.
//   character: the expanded (optionally Higgsed) character, term for term
//   dropped:   the terms removed by Higgsing, relabeled, as a sum of Y-monomials
//   limit:     the classical limit, with optional factorization
//   hasse:     a tikz-cd diagram: nodes, arrows and arrow labels
enum class CheckKind { character, dropped, limit, hasse };

std::string to_string(CheckKind k);

struct Fixture {
  std::string name;
  std::string description;
  std::vector<std::string> tags;
  std::string quiver;  // builtin name or inline JSON
  std::vector<std::pair<std::string, int>> weights;
  // LaTeX symbol -> generator, e.g. "x_1" -> "x(1,1)".
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<Substitution> higgs;
  CheckKind check = CheckKind::character;
  std::optional<Generator> limit;
  std::optional<Substitution> relabel;
  std::optional<std::size_t> expected_terms;
  std::optional<std::size_t> expected_edges;
  std::string latex;
  // Classical characters whose product must equal the limit.
  std::vector<std::string> factors;
  // Known misprint in `latex`; `corrected_latex` must then pass and the
  // literal text must fail.
  std::optional<std::string> typo;
  std::optional<std::string> corrected_latex;
};

Fixture fixture_from_json(std::string_view text);
// Every *.json file in dir, each holding {"fixtures": [...]}; sorted by file
// name, then by position.
std::vector<Fixture> load_corpus(const std::string& dir);

enum class VerifyStatus { pass, fail, typo_flag };

std::string to_string(VerifyStatus s);

struct FixtureResult {
  std::string name;
  std::vector<std::string> tags;
  VerifyStatus status = VerifyStatus::fail;
  std::optional<std::size_t> expected_terms;
  std::size_t actual_terms = 0;
  std::optional<std::size_t> expected_edges;
  std::size_t actual_edges = 0;
  std::string first_difference;  // empty on pass
  std::string note;              // typo text, factorization result
  std::size_t path_mismatches = 0;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<FixtureResult> results;  // in corpus order
  double seconds = 0;

  std::size_t count(VerifyStatus s) const;
  bool ok() const { return count(VerifyStatus::fail) == 0; }
  std::size_t path_mismatches() const;
};

FixtureResult run_fixture(const Fixture& f);
VerifyReport verify(const std::vector<Fixture>& corpus, unsigned threads = 0);

std::string report_to_json(const VerifyReport& r, int indent = 2);
std::string report_to_text(const VerifyReport& r);

// tikz-cd body: cells separated by '&' and '\\', arrows as \arrow[dirs,"label"].
struct TikzGraph {
  std::vector<YMonomial> nodes;
  struct Arrow {
    YMonomial from;
    YMonomial to;
    YKey label;
  };
  std::vector<Arrow> arrows;
};

TikzGraph parse_tikzcd(std::string_view text, const LatexNames& n);

// Names for a fixture: its parameter table plus q-symbols; single-node
// quivers take the node label as default.
LatexNames fixture_names(const Fixture& f, const Quiver& q);

}  // namespace qq
