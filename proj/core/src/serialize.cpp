#include "qqkit/serialize.hpp"

#include <initializer_list>
#include <limits>

#include "json.hpp"
#include "qqkit/errors.hpp"

namespace qq {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
}

void only_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  require_object(j, what);
  for (const auto& [k, v] : j.items()) {
    (void)v;
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ValidationError(std::string("unknown field '") + k + "' in " + what);
  }
}

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "' in " + what);
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ValidationError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<long long>(z.get_si()));
  return json(z.get_str());
}

Integer integer_from(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError(std::string(what) + " must be an integer");
}

Rational rational_from(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(integer_from(j, what));
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::exception&) {
    }
  }
  throw ValidationError(std::string(what) + " must be a rational");
}

json monomial_json(const Monomial& m) {
  json o = json::object();
  for (const auto& [g, e] : m.entries()) o[g.name()] = e;
  return o;
}

Monomial monomial_from(const json& j) {
  if (j.is_string()) return parse_monomial(j.get<std::string>());
  require_object(j, "monomial");
  std::vector<Monomial::Entry> es;
  for (const auto& [k, v] : j.items()) es.emplace_back(Generator::parse(k), as_int(v, "exponent"));
  return Monomial::from_entries(std::move(es));
}

json coefficient_json(const Coefficient& c) {
  json o;
  if (c.is_zero()) {
    o["int"] = 0;
    return o;
  }
  o["unit"] = monomial_json(c.unit());
  o["int"] = integer_json(c.content().get_num());
  if (c.content().get_den() != 1) o["den"] = integer_json(c.content().get_den());
  json fs = json::array();
  for (const auto& f : c.factors()) fs.push_back({{"arg", monomial_json(f.arg)}, {"pow", f.pow}});
  o["factors"] = fs;
  if (c.kind() == Coefficient::Kind::general) {
    json p = json::array();
    for (const auto& [m, r] : c.residual().terms()) p.push_back({{"m", monomial_json(m)}, {"c", r.get_str()}});
    o["poly"] = p;
  }
  return o;
}

Coefficient coefficient_from(const json& j) {
  only_fields(j, {"unit", "int", "den", "factors", "poly"}, "coefficient");
  Rational content(integer_from(field(j, "int", "coefficient"), "int"));
  if (j.contains("den")) {
    Integer d = integer_from(j["den"], "den");
    if (d == 0) throw ValidationError("zero denominator in coefficient");
    content /= Rational(d);
  }
  if (content == 0) return Coefficient::zero();
  Monomial unit = j.contains("unit") ? monomial_from(j["unit"]) : Monomial();
  std::vector<BinomialFactor> fs;
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) throw ValidationError("factors must be an array");
    for (const auto& f : j["factors"]) {
      only_fields(f, {"arg", "pow"}, "factor");
      fs.push_back({monomial_from(field(f, "arg", "factor")), as_int(field(f, "pow", "factor"), "pow")});
    }
  }
  Coefficient c = Coefficient::from_parts(content, unit, fs);
  if (j.contains("poly")) {
    if (!j["poly"].is_array()) throw ValidationError("poly must be an array");
    Poly p;
    for (const auto& t : j["poly"]) {
      only_fields(t, {"m", "c"}, "poly term");
      p.add_term(monomial_from(field(t, "m", "poly term")), rational_from(field(t, "c", "poly term"), "c"));
    }
    c = c * Coefficient::from_poly(p);
  }
  return c;
}

json ykey_json(const YKey& k) { return {{"node", k.node}, {"arg", monomial_json(k.arg)}}; }

YKey ykey_from(const json& j) {
  only_fields(j, {"node", "arg"}, "Y-key");
  return {as_string(field(j, "node", "Y-key"), "node"), monomial_from(field(j, "arg", "Y-key"))};
}

json ymonomial_json(const YMonomial& ym) {
  json a = json::array();
  for (const auto& [k, e] : ym.entries()) a.push_back({{"node", k.node}, {"arg", monomial_json(k.arg)}, {"exp", e}});
  return a;
}

YMonomial ymonomial_from(const json& j) {
  if (!j.is_array()) throw ValidationError("ym must be an array");
  std::vector<YMonomial::Entry> es;
  for (const auto& f : j) {
    only_fields(f, {"node", "arg", "exp"}, "Y-factor");
    es.emplace_back(YKey{as_string(field(f, "node", "Y-factor"), "node"), monomial_from(field(f, "arg", "Y-factor"))},
                    as_int(field(f, "exp", "Y-factor"), "exp"));
  }
  return YMonomial::from_entries(std::move(es));
}

}  // namespace

std::string monomial_to_json(const Monomial& m) { return monomial_json(m).dump(); }
Monomial monomial_from_json(std::string_view text) { return monomial_from(parse_document(text)); }

std::string coefficient_to_json(const Coefficient& c) { return coefficient_json(c).dump(); }
Coefficient coefficient_from_json(std::string_view text) { return coefficient_from(parse_document(text)); }

std::string quiver_to_json(const Quiver& q) {
  json nodes = json::array(), edges = json::array();
  for (const auto& n : q.nodes()) nodes.push_back({{"id", n.id}, {"d", n.d}});
  for (const auto& e : q.edges()) {
    json mu;
    if (e.mass.is_unit() || (e.mass.entries().size() == 1 && e.mass.entries().front().first == Generator::mu()))
      mu = e.mass.exponent(Generator::mu());
    else
      mu = monomial_json(e.mass);
    edges.push_back({{"from", e.from}, {"to", e.to}, {"mu", mu}});
  }
  return json{{"name", q.name()}, {"nodes", nodes}, {"edges", edges}}.dump();
}

Quiver quiver_from_json(std::string_view text) {
  json j = parse_document(text);
  only_fields(j, {"name", "nodes", "edges"}, "quiver");
  std::string name = j.contains("name") ? as_string(j["name"], "name") : "custom";
  const json& jn = field(j, "nodes", "quiver");
  if (!jn.is_array()) throw ValidationError("nodes must be an array");
  std::vector<Node> nodes;
  for (const auto& n : jn) {
    only_fields(n, {"id", "d"}, "node");
    nodes.push_back({as_string(field(n, "id", "node"), "id"), n.contains("d") ? as_int(n["d"], "d") : 1});
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ValidationError("edges must be an array");
    for (const auto& e : j["edges"]) {
      only_fields(e, {"from", "to", "mu"}, "edge");
      Monomial mass;
      if (e.contains("mu")) mass = e["mu"].is_number_integer() ? Monomial::mu(as_int(e["mu"], "mu")) : monomial_from(e["mu"]);
      edges.push_back({as_string(field(e, "from", "edge"), "from"), as_string(field(e, "to", "edge"), "to"), mass});
    }
  }
  return Quiver(name, std::move(nodes), std::move(edges));
}

Quiver resolve_quiver(std::string_view spec) {
  std::size_t k = spec.find_first_not_of(" \t\r\n");
  if (k != std::string_view::npos && spec[k] == '{') return quiver_from_json(spec);
  return Quiver::builtin(spec);
}

std::string character_to_json(const Character& ch, int indent) {
  json terms = json::array(), edges = json::array();
  for (const auto& t : ch.terms)
    terms.push_back({{"ym", ymonomial_json(t.ym)}, {"coeff", coefficient_json(t.coeff)}, {"depth", t.depth}, {"qdeg", t.qdeg}});
  for (const auto& e : ch.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", ykey_json(e.label)}});
  return json{{"terms", terms}, {"edges", edges}}.dump(indent);
}

Character character_from_json(std::string_view text) {
  json j = parse_document(text);
  only_fields(j, {"terms", "edges"}, "character");
  const json& jt = field(j, "terms", "character");
  if (!jt.is_array()) throw ValidationError("terms must be an array");
  Character ch;
  for (const auto& t : jt) {
    only_fields(t, {"ym", "coeff", "depth", "qdeg"}, "term");
    Term term;
    term.ym = ymonomial_from(field(t, "ym", "term"));
    term.coeff = coefficient_from(field(t, "coeff", "term"));
    term.depth = t.contains("depth") ? as_int(t["depth"], "depth") : 0;
    term.qdeg = t.contains("qdeg") ? as_int(t["qdeg"], "qdeg") : 0;
    ch.terms.push_back(std::move(term));
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ValidationError("edges must be an array");
    for (const auto& e : j["edges"]) {
      only_fields(e, {"from", "to", "label"}, "edge");
      int from = as_int(field(e, "from", "edge"), "from"), to = as_int(field(e, "to", "edge"), "to");
      if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= ch.terms.size() ||
          static_cast<std::size_t>(to) >= ch.terms.size())
        throw ValidationError("edge endpoint out of range");
      ch.edges.push_back({static_cast<std::size_t>(from), static_cast<std::size_t>(to), ykey_from(field(e, "label", "edge"))});
    }
  }
  return ch;
}

std::string classical_to_json(const ClassicalCharacter& ch, int indent) {
  json terms = json::array();
  for (const auto& t : ch.terms) terms.push_back({{"ym", ymonomial_json(t.ym)}, {"coeff", integer_json(t.coeff)}});
  return json{{"terms", terms}}.dump(indent);
}

ClassicalCharacter classical_from_json(std::string_view text) {
  json j = parse_document(text);
  only_fields(j, {"terms"}, "classical character");
  const json& jt = field(j, "terms", "classical character");
  if (!jt.is_array()) throw ValidationError("terms must be an array");
  std::vector<ClassicalTerm> ts;
  for (const auto& t : jt) {
    only_fields(t, {"ym", "coeff"}, "term");
    ts.push_back({ymonomial_from(field(t, "ym", "term")), integer_from(field(t, "coeff", "term"), "coeff")});
  }
  return ClassicalCharacter::from_terms(std::move(ts));
}

Substitution substitution_from_json(std::string_view text) {
  json j = parse_document(text);
  require_object(j, "substitution");
  Substitution s;
  for (const auto& [k, v] : j.items()) s[Generator::parse(k)] = monomial_from(v);
  return s;
}

std::string substitution_to_json(const Substitution& s) {
  json o = json::object();
  for (const auto& [g, m] : s) o[g.name()] = monomial_json(m);
  return o.dump();
}

std::vector<std::pair<std::string, int>> weights_from_json(std::string_view text) {
  json j = parse_document(text);
  require_object(j, "weights");
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [k, v] : j.items()) {
    int w = as_int(v, "weight");
    if (w < 0) throw ValidationError("weights must be nonnegative");
    out.emplace_back(k, w);
  }
  return out;
}

bool identical(const Character& a, const Character& b) {
  if (a.terms.size() != b.terms.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto &s = a.terms[i], &t = b.terms[i];
    if (!(s.ym == t.ym) || s.depth != t.depth || s.qdeg != t.qdeg || !s.coeff.same_form(t.coeff)) return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto &e = a.edges[i], &f = b.edges[i];
    if (e.from != f.from || e.to != f.to || !(e.label == f.label)) return false;
  }
  return true;
}

}  // namespace qq
