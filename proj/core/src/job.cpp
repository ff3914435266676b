#include "qqkit/job.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "json.hpp"
#include "qqkit/affine.hpp"
#include "qqkit/engine.hpp"
#include "qqkit/higgs.hpp"
#include "qqkit/latex.hpp"
#include "qqkit/serialize.hpp"
#include "qqkit/verify.hpp"

namespace qq {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::expand, "expand"},           {Command::higgs, "higgs"},
    {Command::limit, "limit"},             {Command::hasse, "hasse"},
    {Command::affine_expand, "affine-expand"}, {Command::burge_check, "burge-check"},
    {Command::verify, "verify"},
};

constexpr std::pair<Format, const char*> kFormats[] = {
    {Format::json, "json"}, {Format::latex, "latex"}, {Format::dot, "dot"}, {Format::text, "text"}};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ValidationError("weight '" + s + "' is not an integer");
  return v;
}

Format format_or(const JobSpec& job, Format fallback, std::initializer_list<Format> allowed) {
  Format f = job.format.value_or(fallback);
  for (Format a : allowed)
    if (a == f) return f;
  throw ValidationError("format " + to_string(f) + " is not available for " + to_string(job.command));
}

struct Pipeline {
  Quiver quiver;
  WeightConfig generic;
  Character expanded;
  LatexNames names;
};

Pipeline expand_stage(const JobSpec& job) {
  Pipeline p;
  p.quiver = resolve_quiver(job.quiver);
  p.generic = WeightConfig::generic(p.quiver, parse_weights(job.w, p.quiver));
  p.names = LatexNames::for_weights(p.quiver, p.generic);
  WeightConfig w = p.generic;
  if (job.params)
    for (auto& [node, x] : w.params) x = x.substitute(*job.params);
  ExpandOptions opt;
  opt.max_degree = job.max_degree;
  opt.max_terms = job.max_terms;
  opt.threads = job.threads;
  p.expanded = expand(p.quiver, w, opt);
  return p;
}

std::string emit_character(const Character& ch, const LatexNames& n, Format f) {
  switch (f) {
    case Format::json: return character_to_json(ch, 2) + "\n";
    case Format::latex: return to_latex(ch, n) + "\n";
    case Format::dot: return hasse_dot(ch, n);
    case Format::text: return to_text(ch);
  }
  return {};
}

std::string emit_classical(const ClassicalCharacter& ch, const LatexNames& n, Format f) {
  switch (f) {
    case Format::json: return classical_to_json(ch, 2) + "\n";
    case Format::latex: return to_latex(ch, n) + "\n";
    case Format::text: return to_text(ch);
    case Format::dot: break;
  }
  throw ValidationError("classical characters have no dot form");
}

JobResult run_character(const JobSpec& job) {
  Pipeline p = expand_stage(job);
  const bool hasse = job.command == Command::hasse;
  const Format f = hasse ? format_or(job, Format::dot, {Format::dot, Format::json, Format::text})
                   : job.command == Command::limit
                       ? format_or(job, Format::json, {Format::json, Format::latex, Format::text})
                       : format_or(job, Format::json, {Format::json, Format::latex, Format::dot, Format::text});

  if (job.command == Command::higgs && !job.higgs) throw ValidationError("higgs needs a substitution (--higgs)");
  if (job.command == Command::limit && !job.limit) throw ValidationError("limit needs --limit q1|q2");

  Character ch = std::move(p.expanded);
  std::vector<Term> dropped;
  if (job.higgs) {
    HiggsResult h = higgs(ch, *job.higgs);
    ch = std::move(h.kept);
    dropped = std::move(h.dropped);
  }

  if (job.limit) {
    if (job.command != Command::limit && job.command != Command::expand && job.command != Command::higgs)
      throw ValidationError("--limit applies to expand, higgs and limit");
    return {emit_classical(classical_limit(ch, *job.limit), p.names, f), ExitCode::ok};
  }

  if (job.command == Command::higgs) {
    Character gone{dropped, {}};
    switch (f) {
      case Format::json: {
        ojson doc;
        doc["kept"] = json::parse(character_to_json(ch));
        doc["dropped"] = json::parse(character_to_json(gone))["terms"];
        return {doc.dump(2) + "\n", ExitCode::ok};
      }
      case Format::text: return {to_text(ch) + "dropped:\n" + to_text(gone), ExitCode::ok};
      default: break;
    }
  }
  return {emit_character(ch, p.names, f), ExitCode::ok};
}

JobResult run_affine(const JobSpec& job) {
  const Format f = format_or(job, Format::json, {Format::json, Format::latex, Format::text});
  if (!job.max_degree) throw ValidationError("affine-expand needs a counting-degree cutoff (--max-deg)");
  Quiver q = resolve_quiver(job.quiver);
  WeightConfig w = WeightConfig::generic(q, parse_weights(job.w, q));
  if (job.params)
    for (auto& [node, x] : w.params) x = x.substitute(*job.params);
  Character ch = affine_character(q, w, *job.max_degree, job.threads);
  LatexNames names = LatexNames::for_weights(q, WeightConfig::generic(q, parse_weights(job.w, q)));

  if (f == Format::latex) return {to_latex(ch, names) + "\n", ExitCode::ok};
  if (f == Format::text) return {to_text(ch), ExitCode::ok};

  json terms = json::parse(character_to_json(ch))["terms"];
  std::map<int, json> by_degree;
  for (int k = 0; k <= *job.max_degree; ++k) by_degree[k] = json::array();
  for (auto& t : terms) by_degree[t["qdeg"].get<int>()].push_back(std::move(t));
  ojson doc;
  doc["quiver"] = q.name();
  doc["max_deg"] = *job.max_degree;
  doc["series"] = ojson::array();
  for (auto& [k, ts] : by_degree) {
    ojson entry;
    entry["qdeg"] = k;
    entry["terms"] = ts;
    doc["series"].push_back(std::move(entry));
  }
  return {doc.dump(2) + "\n", ExitCode::ok};
}

ojson report_json(const EquivalenceReport& rep) {
  ojson j;
  j["checked"] = rep.checked;
  j["vanishing"] = rep.vanishing;
  j["exceptions"] = rep.exceptions;
  j["samples"] = rep.samples;
  return j;
}

JobResult run_burge(const JobSpec& job) {
  const Format f = format_or(job, Format::json, {Format::json, Format::text});
  if (job.r < 1) throw ValidationError("r must be positive");
  if (job.max_size < 0) throw ValidationError("max size must be nonnegative");

  ojson doc;
  doc["mode"] = job.pit ? "pit" : "burge";
  doc["r"] = job.r;
  doc["i"] = job.i;
  doc["j"] = job.j;
  doc["max_size"] = job.max_size;
  std::size_t exceptions = 0;
  std::string text;

  if (job.pit) {
    check_pit(job.i, job.j, job.r);
    EquivalenceReport rep = pit_equivalence(job.r, job.i, job.j, job.max_size);
    exceptions = rep.exceptions;
    doc["result"] = report_json(rep);
    text = "pit r=" + std::to_string(job.r) + " (" + std::to_string(job.i) + "," + std::to_string(job.j) +
           ") checked " + std::to_string(rep.checked) + " vanishing " + std::to_string(rep.vanishing) +
           " exceptions " + std::to_string(rep.exceptions) + "\n";
  } else {
    doc["pairs"] = ojson::array();
    for (int a = 0; a < job.r; ++a) {
      if (job.node_alpha && *job.node_alpha != a) continue;
      for (int b = 0; b < job.r; ++b) {
        if (job.node_beta && *job.node_beta != b) continue;
        EquivalenceReport rep = burge_equivalence(job.r, job.i, job.j, a, b, job.max_size, job.threads);
        exceptions += rep.exceptions;
        ojson entry = report_json(rep);
        entry["alpha"] = a;
        entry["beta"] = b;
        entry["applies"] = burge_applies(job.i, job.j, a, b, job.r);
        doc["pairs"].push_back(std::move(entry));
        text += "burge r=" + std::to_string(job.r) + " i=" + std::to_string(job.i) + " j=" + std::to_string(job.j) +
                " nodes " + std::to_string(a) + "," + std::to_string(b) + " checked " + std::to_string(rep.checked) +
                " vanishing " + std::to_string(rep.vanishing) + " exceptions " + std::to_string(rep.exceptions) +
                "\n";
      }
    }
    if (doc["pairs"].empty()) throw ValidationError("node selection is outside 0..r-1");
  }
  doc["exceptions"] = exceptions;
  JobResult res;
  res.output = f == Format::json ? doc.dump(2) + "\n" : text;
  res.code = exceptions == 0 ? ExitCode::ok : ExitCode::verify_failed;
  return res;
}

JobResult run_verify(const JobSpec& job) {
  const Format f = format_or(job, Format::text, {Format::json, Format::text});
  if (job.corpus.empty()) throw ValidationError("verify needs a fixture directory");
  VerifyReport rep = verify(load_corpus(job.corpus), job.threads);
  JobResult res;
  res.output = f == Format::json ? report_to_json(rep) + "\n" : report_to_text(rep);
  res.code = rep.ok() ? ExitCode::ok : ExitCode::verify_failed;
  return res;
}

int int_field(const json& j, const char* key) {
  if (!j.is_number_integer()) throw ValidationError(std::string("job field '") + key + "' must be an integer");
  return j.get<int>();
}

std::string string_field(const json& j, const char* key) {
  if (!j.is_string()) throw ValidationError(std::string("job field '") + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [k, s] : kCommands)
    if (k == c) return s;
  return "?";
}

std::string to_string(Format f) {
  for (const auto& [k, s] : kFormats)
    if (k == f) return s;
  return "?";
}

Command command_from_string(std::string_view s) {
  for (const auto& [k, name] : kCommands)
    if (s == name) return k;
  throw ValidationError("unknown command '" + std::string(s) + "'");
}

Format format_from_string(std::string_view s) {
  for (const auto& [k, name] : kFormats)
    if (s == name) return k;
  throw ValidationError("unknown format '" + std::string(s) + "'");
}

std::vector<std::pair<std::string, int>> parse_weights(std::string_view text, const Quiver& q) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') return weights_from_json(s);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw ValidationError("unbalanced weight tuple '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> values;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    values.push_back(parse_int(trim(s.substr(start, comma - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != q.nodes().size())
    throw ValidationError("weight tuple has " + std::to_string(values.size()) + " entries but " + q.name() + " has " +
                          std::to_string(q.nodes().size()) + " nodes");
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0) throw ValidationError("weights must be nonnegative");
    out.emplace_back(q.nodes()[k].id, values[k]);
  }
  return out;
}

JobSpec job_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed job: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("job must be a JSON object");
  static const char* const allowed[] = {"command", "quiver", "w",     "params", "higgs", "limit", "max_deg",
                                        "max_terms", "format", "r",   "i",      "j",     "max_size", "pit",
                                        "alpha",   "beta",   "corpus", "threads"};
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::find(std::begin(allowed), std::end(allowed), k) == std::end(allowed))
      throw ValidationError("unknown job field '" + k + "'");
  }
  if (!j.contains("command")) throw ValidationError("job is missing 'command'");

  JobSpec job;
  job.command = command_from_string(string_field(j["command"], "command"));
  if (j.contains("quiver")) job.quiver = j["quiver"].is_string() ? j["quiver"].get<std::string>() : j["quiver"].dump();
  if (j.contains("w")) job.w = j["w"].is_string() ? j["w"].get<std::string>() : j["w"].dump();
  if (j.contains("params")) job.params = substitution_from_json(j["params"].dump());
  if (j.contains("higgs")) job.higgs = substitution_from_json(j["higgs"].dump());
  if (j.contains("limit")) {
    std::string g = string_field(j["limit"], "limit");
    if (g != "q1" && g != "q2") throw ValidationError("limit must be q1 or q2");
    job.limit = Generator::parse(g);
  }
  if (j.contains("max_deg")) job.max_degree = int_field(j["max_deg"], "max_deg");
  if (j.contains("max_terms")) {
    if (!j["max_terms"].is_number_unsigned()) throw ValidationError("job field 'max_terms' must be a count");
    job.max_terms = j["max_terms"].get<std::size_t>();
  }
  if (j.contains("format")) job.format = format_from_string(string_field(j["format"], "format"));
  if (j.contains("r")) job.r = int_field(j["r"], "r");
  if (j.contains("i")) job.i = int_field(j["i"], "i");
  if (j.contains("j")) job.j = int_field(j["j"], "j");
  if (j.contains("max_size")) job.max_size = int_field(j["max_size"], "max_size");
  if (j.contains("pit")) {
    if (!j["pit"].is_boolean()) throw ValidationError("job field 'pit' must be a boolean");
    job.pit = j["pit"].get<bool>();
  }
  if (j.contains("alpha")) job.node_alpha = int_field(j["alpha"], "alpha");
  if (j.contains("beta")) job.node_beta = int_field(j["beta"], "beta");
  if (j.contains("corpus")) job.corpus = string_field(j["corpus"], "corpus");
  if (j.contains("threads")) {
    int t = int_field(j["threads"], "threads");
    if (t < 0) throw ValidationError("threads must be nonnegative");
    job.threads = static_cast<unsigned>(t);
  }
  return job;
}

JobResult run(const JobSpec& job) {
  switch (job.command) {
    case Command::expand:
    case Command::higgs:
    case Command::limit:
    case Command::hasse: return run_character(job);
    case Command::affine_expand: return run_affine(job);
    case Command::burge_check: return run_burge(job);
    case Command::verify: return run_verify(job);
  }
  throw Error("unhandled command");
}

}  // namespace qq
