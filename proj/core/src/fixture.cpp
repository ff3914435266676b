#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "qqkit/errors.hpp"
#include "qqkit/serialize.hpp"
#include "qqkit/verify.hpp"

namespace qq {

using nlohmann::json;

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::character: return "character";
    case CheckKind::dropped: return "dropped";
    case CheckKind::limit: return "limit";
    case CheckKind::hasse: return "hasse";
  }
  return "?";
}

namespace {

CheckKind check_from(const std::string& s) {
  for (CheckKind k : {CheckKind::character, CheckKind::dropped, CheckKind::limit, CheckKind::hasse})
    if (to_string(k) == s) return k;
  throw ValidationError("unknown check '" + s + "'");
}

std::string string_field(const json& j, const char* key) {
  if (!j.is_string()) throw ValidationError(std::string("fixture field '") + key + "' must be a string");
  return j.get<std::string>();
}

// A string, or an array of lines joined by newlines.
std::string text_field(const json& j, const char* key) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) throw ValidationError(std::string("fixture field '") + key + "' must be text");
  std::string out;
  for (const auto& line : j) {
    if (!out.empty()) out += '\n';
    out += string_field(line, key);
  }
  return out;
}

std::size_t count_field(const json& j, const char* key) {
  if (!j.is_number_unsigned()) throw ValidationError(std::string("fixture field '") + key + "' must be a count");
  return j.get<std::size_t>();
}

Fixture fixture_from(const json& j) {
  if (!j.is_object()) throw ValidationError("fixture must be an object");
  static const char* const allowed[] = {"name",     "description", "tags",     "quiver",         "weights",
                                        "params",   "higgs",       "check",    "limit",          "relabel",
                                        "expected_terms", "expected_edges", "latex", "factors", "typo",
                                        "corrected_latex"};
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::find(std::begin(allowed), std::end(allowed), k) == std::end(allowed))
      throw ValidationError("unknown fixture field '" + k + "'");
  }
  for (const char* req : {"name", "quiver", "weights", "check", "latex"})
    if (!j.contains(req)) throw ValidationError(std::string("fixture is missing '") + req + "'");

  Fixture f;
  f.name = string_field(j["name"], "name");
  try {
    if (j.contains("description")) f.description = text_field(j["description"], "description");
    if (j.contains("tags")) {
      if (!j["tags"].is_array()) throw ValidationError("tags must be an array");
      for (const auto& t : j["tags"]) f.tags.push_back(string_field(t, "tags"));
    }
    f.quiver = j["quiver"].is_string() ? j["quiver"].get<std::string>() : j["quiver"].dump();
    f.weights = weights_from_json(j["weights"].dump());
    if (j.contains("params")) {
      if (!j["params"].is_object()) throw ValidationError("params must be an object");
      for (const auto& [k, v] : j["params"].items()) {
        Generator::parse(string_field(v, "params"));
        f.params.emplace_back(k, v.get<std::string>());
      }
    }
    if (j.contains("higgs")) f.higgs = substitution_from_json(j["higgs"].dump());
    f.check = check_from(string_field(j["check"], "check"));
    if (j.contains("limit")) {
      std::string g = string_field(j["limit"], "limit");
      if (g != "q1" && g != "q2") throw ValidationError("limit must be q1 or q2");
      f.limit = Generator::parse(g);
    }
    if (j.contains("relabel")) f.relabel = substitution_from_json(j["relabel"].dump());
    if (j.contains("expected_terms")) f.expected_terms = count_field(j["expected_terms"], "expected_terms");
    if (j.contains("expected_edges")) f.expected_edges = count_field(j["expected_edges"], "expected_edges");
    f.latex = text_field(j["latex"], "latex");
    if (j.contains("factors")) {
      if (!j["factors"].is_array()) throw ValidationError("factors must be an array");
      for (const auto& t : j["factors"]) f.factors.push_back(text_field(t, "factors"));
    }
    if (j.contains("typo")) f.typo = text_field(j["typo"], "typo");
    if (j.contains("corrected_latex")) f.corrected_latex = text_field(j["corrected_latex"], "corrected_latex");
  } catch (const ValidationError& e) {
    throw ValidationError("fixture '" + f.name + "': " + e.what());
  }
  if (f.check == CheckKind::limit && !f.limit) throw ValidationError("fixture '" + f.name + "': limit check needs 'limit'");
  if (f.check != CheckKind::limit && !f.factors.empty())
    throw ValidationError("fixture '" + f.name + "': factors apply to limit checks only");
  if (f.typo.has_value() != f.corrected_latex.has_value())
    throw ValidationError("fixture '" + f.name + "': typo and corrected_latex go together");
  return f;
}

}  // namespace

Fixture fixture_from_json(std::string_view text) {
  try {
    return fixture_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed fixture: ") + e.what());
  }
}

std::vector<Fixture> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ValidationError("fixture directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<Fixture> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    json doc;
    try {
      doc = json::parse(ss.str());
    } catch (const json::exception& e) {
      throw ValidationError(p.filename().string() + ": " + e.what());
    }
    if (!doc.is_object() || doc.size() != 1 || !doc.contains("fixtures") || !doc["fixtures"].is_array())
      throw ValidationError(p.filename().string() + ": expected {\"fixtures\": [...]}");
    for (const auto& f : doc["fixtures"]) {
      try {
        out.push_back(fixture_from(f));
      } catch (const json::exception& e) {
        throw ValidationError(p.filename().string() + ": " + e.what());
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (out[i].name == out[k].name) throw ValidationError("duplicate fixture name '" + out[i].name + "'");
  return out;
}

LatexNames fixture_names(const Fixture& f, const Quiver& q) {
  LatexNames n = LatexNames::base(q);
  for (const auto& [sym, gen] : f.params) n.add(Generator::parse(gen), sym);
  return n;
}

}  // namespace qq
