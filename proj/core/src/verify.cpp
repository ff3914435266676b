#include "qqkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/errors.hpp"
#include "qqkit/higgs.hpp"
#include "qqkit/parallel.hpp"
#include "qqkit/serialize.hpp"

namespace qq {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::typo_flag: return "paper-typo-flag";
  }
  return "?";
}

std::size_t VerifyReport::count(VerifyStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const FixtureResult& r) { return r.status == s; }));
}

std::size_t VerifyReport::path_mismatches() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.path_mismatches;
  return n;
}

// ---------------------------------------------------------------- tikz-cd

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_top(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\' && s.substr(i, sep.size()) != sep) {
      ++i;
      continue;
    }
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    if (depth == 0 && s.substr(i, sep.size()) == sep) {
      out.emplace_back(s.substr(start, i - start));
      i += sep.size() - 1;
      start = i + 1;
    }
  }
  out.emplace_back(s.substr(start));
  return out;
}

YMonomial single_monomial(const std::string& text, const LatexNames& n) {
  auto sides = parse_latex(text, n);
  if (sides.size() != 1 || sides.front().size() != 1 || !sides.front().begin()->second.equals(Coefficient::one()))
    throw ValidationError("diagram cell is not a single monomial: " + text);
  return sides.front().begin()->first;
}

struct RawArrow {
  int drow = 0, dcol = 0;
  std::string label;
};

RawArrow parse_arrow_options(const std::string& opts) {
  RawArrow a;
  std::size_t i = 0;
  while (i < opts.size() && std::isalpha(static_cast<unsigned char>(opts[i]))) {
    switch (opts[i]) {
      case 'l': --a.dcol; break;
      case 'r': ++a.dcol; break;
      case 'u': --a.drow; break;
      case 'd': ++a.drow; break;
      default: throw ValidationError("unknown arrow direction in '" + opts + "'");
    }
    ++i;
  }
  std::size_t q1 = opts.find('"', i);
  std::size_t q2 = q1 == std::string::npos ? q1 : opts.find('"', q1 + 1);
  if (q2 == std::string::npos) throw ValidationError("arrow without label: " + opts);
  std::string label = trim(opts.substr(q1 + 1, q2 - q1 - 1));
  if (label.size() >= 2 && label.front() == '{' && label.back() == '}') label = label.substr(1, label.size() - 2);
  a.label = label;
  return a;
}

}  // namespace

TikzGraph parse_tikzcd(std::string_view text, const LatexNames& n) {
  std::string_view body = text;
  if (auto b = body.find("\\begin{tikzcd}"); b != std::string_view::npos) {
    body = body.substr(b + 14);
    std::size_t k = body.find_first_not_of(" \t\r\n");
    if (k != std::string_view::npos && body[k] == '[') {
      std::size_t close = body.find(']', k);
      if (close == std::string_view::npos) throw ValidationError("unterminated tikzcd options");
      body = body.substr(close + 1);
    }
  }
  if (auto e = body.find("\\end{tikzcd}"); e != std::string_view::npos) body = body.substr(0, e);

  struct Cell {
    int row, col;
    YMonomial ym;
    std::vector<RawArrow> arrows;
  };
  std::vector<Cell> cells;
  std::map<std::pair<int, int>, YMonomial> at;
  auto rows = split_top(body, "\\\\");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto cols = split_top(rows[r], "&");
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string cell = cols[c];
      std::vector<RawArrow> arrows;
      for (std::size_t p; (p = cell.find("\\arrow[")) != std::string::npos;) {
        std::size_t close = cell.find(']', p);
        if (close == std::string::npos) throw ValidationError("unterminated \\arrow");
        arrows.push_back(parse_arrow_options(cell.substr(p + 7, close - p - 7)));
        cell.erase(p, close - p + 1);
      }
      cell = trim(cell);
      if (cell.empty()) {
        if (!arrows.empty()) throw ValidationError("arrow from an empty diagram cell");
        continue;
      }
      YMonomial ym = single_monomial(cell, n);
      at[{static_cast<int>(r), static_cast<int>(c)}] = ym;
      cells.push_back({static_cast<int>(r), static_cast<int>(c), ym, std::move(arrows)});
    }
  }

  TikzGraph g;
  for (const auto& cell : cells) {
    g.nodes.push_back(cell.ym);
    for (const auto& a : cell.arrows) {
      auto it = at.find({cell.row + a.drow, cell.col + a.dcol});
      if (it == at.end())
        throw ValidationError("arrow from " + cell.ym.to_string() + " points at an empty cell");
      YMonomial lab = single_monomial("\\mathsf{Y}_{" + a.label + "}", n);
      if (lab.entries().size() != 1 || lab.entries().front().second != 1)
        throw ValidationError("arrow label is not a single Y-factor: " + a.label);
      g.arrows.push_back({cell.ym, it->second, lab.entries().front().first});
    }
  }
  return g;
}

// ---------------------------------------------------------------- fixtures

namespace {

std::string classical_diff(const ClassicalCharacter& actual, const ClassicalCharacter& expected) {
  std::map<YMonomial, Integer> a, e;
  for (const auto& t : actual.terms) a[t.ym] = t.coeff;
  for (const auto& t : expected.terms) e[t.ym] = t.coeff;
  for (const auto& [ym, c] : e) {
    auto it = a.find(ym);
    if (it == a.end()) return "missing " + ym.to_string() + " (expected coefficient " + c.get_str() + ")";
    if (it->second != c)
      return ym.to_string() + ": expected " + c.get_str() + ", got " + it->second.get_str();
  }
  for (const auto& [ym, c] : a)
    if (!e.count(ym)) return "unexpected " + ym.to_string() + " (coefficient " + c.get_str() + ")";
  return {};
}

template <class T>
std::string multiset_diff(std::vector<T> actual, std::vector<T> expected, const char* what,
                          std::string (*show)(const T&)) {
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  std::vector<T> missing, extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  if (!missing.empty()) return std::string("missing ") + what + " " + show(missing.front());
  if (!extra.empty()) return std::string("unexpected ") + what + " " + show(extra.front());
  return {};
}

using ArrowKey = std::tuple<YMonomial, YMonomial, YKey>;

std::string show_node(const YMonomial& m) { return m.to_string(); }
std::string show_arrow(const ArrowKey& a) {
  return std::get<0>(a).to_string() + " -> " + std::get<1>(a).to_string() + " [" + std::get<2>(a).to_string() + "]";
}

struct Subject {
  const Fixture& f;
  const Quiver& q;
  const Character& kept;
  const std::vector<Term>& dropped;
  const LatexNames& names;
};

// Compares one LaTeX text against the computed object; returns the first
// difference, empty when equal. Parse errors count as differences.
std::string compare(const Subject& s, const std::string& latex, std::size_t& expected_size) {
  try {
    switch (s.f.check) {
      case CheckKind::character:
      case CheckKind::dropped: {
        Character actual = s.f.check == CheckKind::character ? s.kept : relabel(s.dropped, s.f.relabel.value_or(Substitution{}));
        for (const auto& side : parse_latex(latex, s.names)) {
          Character e = to_character(side);
          expected_size = e.size();
          std::string why;
          if (!same_terms(actual, e, &why)) return why.empty() ? "terms differ" : why;
        }
        return {};
      }
      case CheckKind::limit: {
        ClassicalCharacter actual = classical_limit(s.kept, *s.f.limit);
        for (const auto& side : parse_latex(latex, s.names)) {
          ClassicalCharacter e = to_classical(side);
          expected_size = e.terms.size();
          if (!(actual == e)) {
            std::string d = classical_diff(actual, e);
            return d.empty() ? "terms differ" : d;
          }
        }
        return {};
      }
      case CheckKind::hasse: {
        TikzGraph g = parse_tikzcd(latex, s.names);
        expected_size = g.nodes.size();
        std::vector<YMonomial> nodes;
        for (const auto& t : s.kept.terms) nodes.push_back(t.ym);
        if (auto d = multiset_diff<YMonomial>(nodes, g.nodes, "node", show_node); !d.empty()) return d;
        std::vector<ArrowKey> actual, expected;
        for (const auto& e : s.kept.edges) actual.emplace_back(s.kept.terms[e.from].ym, s.kept.terms[e.to].ym, e.label);
        for (const auto& a : g.arrows) expected.emplace_back(a.from, a.to, a.label);
        return multiset_diff<ArrowKey>(actual, expected, "arrow", show_arrow);
      }
    }
  } catch (const Error& e) {
    return std::string(e.kind()) + ": " + e.what();
  }
  return "unsupported check";
}

}  // namespace

FixtureResult run_fixture(const Fixture& f) {
  auto t0 = std::chrono::steady_clock::now();
  FixtureResult r;
  r.name = f.name;
  r.tags = f.tags;
  r.expected_terms = f.expected_terms;
  r.expected_edges = f.expected_edges;
  try {
    Quiver q = resolve_quiver(f.quiver);
    WeightConfig w = WeightConfig::generic(q, f.weights);
    ExpandStats stats;
    ExpandOptions opt;
    opt.threads = 1;
    opt.stats = &stats;
    Character kept = expand(q, w, opt);
    r.path_mismatches = stats.path_mismatches;
    std::vector<Term> dropped;
    if (f.higgs) {
      HiggsResult h = higgs(kept, *f.higgs);
      kept = std::move(h.kept);
      dropped = std::move(h.dropped);
    }
    LatexNames names = fixture_names(f, q);
    Subject s{f, q, kept, dropped, names};

    switch (f.check) {
      case CheckKind::character:
      case CheckKind::hasse: r.actual_terms = kept.size(); break;
      case CheckKind::dropped: r.actual_terms = dropped.size(); break;
      case CheckKind::limit: r.actual_terms = classical_limit(kept, *f.limit).terms.size(); break;
    }
    r.actual_edges = kept.edges.size();

    std::size_t literal_size = 0;
    std::string literal = compare(s, f.latex, literal_size);
    std::string diff;
    if (f.typo) {
      std::size_t corrected_size = 0;
      std::string corrected = compare(s, *f.corrected_latex, corrected_size);
      if (!corrected.empty()) {
        diff = "corrected text: " + corrected;
      } else if (literal.empty()) {
        diff = "literal text matches although a misprint is recorded";
      } else {
        r.note = *f.typo + " (literal text: " + literal + ")";
      }
    } else {
      diff = literal;
    }
    if (diff.empty() && f.expected_terms && *f.expected_terms != r.actual_terms)
      diff = "expected " + std::to_string(*f.expected_terms) + " terms, got " + std::to_string(r.actual_terms);
    if (diff.empty() && f.expected_edges && *f.expected_edges != r.actual_edges)
      diff = "expected " + std::to_string(*f.expected_edges) + " edges, got " + std::to_string(r.actual_edges);
    if (diff.empty() && !f.factors.empty()) {
      std::vector<ClassicalCharacter> fs;
      for (const auto& t : f.factors) {
        auto sides = parse_latex(t, names);
        if (sides.size() != 1) throw ValidationError("factor must be a single expression");
        fs.push_back(to_classical(sides.front()));
      }
      if (factorize_check(classical_limit(kept, *f.limit), fs))
        r.note += (r.note.empty() ? "" : "; ") + std::string("factorization holds");
      else
        diff = "product of the given factors differs from the limit";
    }
    if (diff.empty() && r.path_mismatches != 0) diff = "reflection paths disagreed";
    r.first_difference = diff;
    r.status = !diff.empty() ? VerifyStatus::fail : f.typo ? VerifyStatus::typo_flag : VerifyStatus::pass;
  } catch (const Error& e) {
    r.status = VerifyStatus::fail;
    r.first_difference = std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    r.status = VerifyStatus::fail;
    r.first_difference = std::string("internal: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerifyReport verify(const std::vector<Fixture>& corpus, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.results.resize(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { rep.results[i] = run_fixture(corpus[i]); }, threads);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string report_to_json(const VerifyReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json fx = ordered_json::array();
  for (const auto& x : r.results) {
    ordered_json o;
    o["name"] = x.name;
    o["status"] = to_string(x.status);
    o["expected_terms"] = x.expected_terms ? ordered_json(*x.expected_terms) : ordered_json(nullptr);
    o["actual_terms"] = x.actual_terms;
    if (x.expected_edges) {
      o["expected_edges"] = *x.expected_edges;
      o["actual_edges"] = x.actual_edges;
    }
    o["first_difference"] = x.first_difference.empty() ? ordered_json(nullptr) : ordered_json(x.first_difference);
    if (!x.note.empty()) o["note"] = x.note;
    o["seconds"] = x.seconds;
    fx.push_back(o);
  }
  ordered_json summary;
  summary["pass"] = r.count(VerifyStatus::pass);
  summary["fail"] = r.count(VerifyStatus::fail);
  summary["paper-typo-flag"] = r.count(VerifyStatus::typo_flag);
  summary["path_mismatches"] = r.path_mismatches();
  summary["seconds"] = r.seconds;
  ordered_json doc;
  doc["fixtures"] = fx;
  doc["summary"] = summary;
  return doc.dump(indent);
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& x : r.results) {
    std::string tag = x.status == VerifyStatus::pass ? "PASS" : x.status == VerifyStatus::fail ? "FAIL" : "TYPO";
    os << tag << "  " << std::left << std::setw(44) << x.name << " terms " << x.actual_terms;
    if (x.expected_terms) os << "/" << *x.expected_terms;
    if (x.expected_edges) os << "  edges " << x.actual_edges << "/" << *x.expected_edges;
    os << "  " << std::fixed << std::setprecision(3) << x.seconds << "s\n";
    if (!x.first_difference.empty()) os << "      " << x.first_difference << "\n";
    if (!x.note.empty()) os << "      " << x.note << "\n";
  }
  os << r.count(VerifyStatus::pass) << " pass, " << r.count(VerifyStatus::fail) << " fail, "
     << r.count(VerifyStatus::typo_flag) << " paper-typo-flag, " << r.path_mismatches() << " path mismatches, "
     << std::fixed << std::setprecision(2) << r.seconds << "s\n";
  return os.str();
}

}  // namespace qq
