#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qqkit/errors.hpp"
#include "qqkit/monomial.hpp"
#include "qqkit/quiver.hpp"

namespace qq {

enum class Command { expand, higgs, limit, hasse, affine_expand, burge_check, verify };
enum class Format { json, latex, dot, text };

std::string to_string(Command c);
std::string to_string(Format f);
Command command_from_string(std::string_view s);
Format format_from_string(std::string_view s);

// One CLI invocation. Pipeline: expand -> [higgs] -> [limit].
struct JobSpec {
  Command command = Command::expand;
  std::string quiver = "A1";  // builtin name or inline JSON
  std::string w = "1";  // as accepted by parse_weights
  // Applied to the weight parameters before expanding.
  std::optional<Substitution> params;
  // Applied to the expanded character.
  std::optional<Substitution> higgs;
  std::optional<Generator> limit;
  std::optional<int> max_degree;
  std::size_t max_terms = 1'000'000;
  std::optional<Format> format;  // unset: per-command default
  // affine-expand / burge-check
  int r = 1;
  int i = 0;
  int j = 1;
  int max_size = 6;
  bool pit = false;
  std::optional<int> node_alpha;
  std::optional<int> node_beta;
  // verify
  std::string corpus;
  unsigned threads = 0;
};

// {"command": "expand", "quiver": "A1", "w": {"1": 2}, "params": {...},
//  "higgs": {...}, "limit": "q1", "max_deg": 3, "max_terms": n, "format": "latex",
//  "r", "i", "j", "max_size", "pit", "alpha", "beta", "corpus", "threads"}
// Unknown fields are rejected.
JobSpec job_from_json(std::string_view text);

// "2", "(2,0)", "2,0", "[2,0]" (in node order) or a JSON object {"1": 2}.
std::vector<std::pair<std::string, int>> parse_weights(std::string_view text, const Quiver& q);

struct JobResult {
  std::string output;
  ExitCode code = ExitCode::ok;
};

// Errors propagate as qq::Error; report-style commands (verify, burge-check)
// return verify_failed instead of throwing.
JobResult run(const JobSpec& job);

}  // namespace qq
