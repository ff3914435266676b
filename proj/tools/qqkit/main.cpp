#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qqkit/errors.hpp"
#include "qqkit/job.hpp"
#include "qqkit/serialize.hpp"

namespace {

// "@path" reads the file, "-" reads stdin, anything else is the value itself.
std::string read_value(const std::string& v) {
  if (v == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (v.empty() || v.front() != '@') return v;
  std::ifstream in(v.substr(1));
  if (!in) throw qq::ValidationError("cannot read " + v.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::string quiver = "A1";
  std::string w = "1";
  std::string params;
  std::string higgs;
  std::string limit;
  std::optional<int> max_deg;
  std::size_t max_terms = 1'000'000;
  std::string format;
  std::string out;
  int r = 1;
  int i = 0;
  int j = 1;
  int max_size = 6;
  bool pit = false;
  std::optional<int> alpha;
  std::optional<int> beta;
  std::string corpus = QQKIT_DEFAULT_CORPUS;
  unsigned threads = 0;
  std::string job_file;
};

void add_output(CLI::App* sub, Flags& f, const char* formats) {
  sub->add_option("--format", f.format, std::string("output format: ") + formats);
  sub->add_option("--out", f.out, "write output to this file instead of stdout");
  sub->add_option("--threads", f.threads, "worker threads (0: QQKIT_THREADS or hardware)");
}

void add_character(CLI::App* sub, Flags& f) {
  sub->add_option("--quiver", f.quiver, "built-in quiver (A1, A2, BC2, A0hat, Arhat:r) or inline JSON")
      ->capture_default_str();
  sub->add_option("--w", f.w, "weights: 2, (2,0) in node order, or {\"1\":2}")->capture_default_str();
  sub->add_option("--params", f.params, "substitution for the weight parameters before expanding (JSON or @file)");
  sub->add_option("--max-deg", f.max_deg, "counting-degree cutoff (required for affine quivers)");
  sub->add_option("--max-terms", f.max_terms, "abort above this many terms")->capture_default_str();
}

qq::JobSpec to_job(qq::Command c, const Flags& f) {
  qq::JobSpec job;
  job.command = c;
  job.quiver = read_value(f.quiver);
  job.w = read_value(f.w);
  if (!f.params.empty()) job.params = qq::substitution_from_json(read_value(f.params));
  if (!f.higgs.empty()) job.higgs = qq::substitution_from_json(read_value(f.higgs));
  if (!f.limit.empty()) {
    if (f.limit != "q1" && f.limit != "q2") throw qq::ValidationError("--limit must be q1 or q2");
    job.limit = qq::Generator::parse(f.limit);
  }
  job.max_degree = f.max_deg;
  job.max_terms = f.max_terms;
  if (!f.format.empty()) job.format = qq::format_from_string(f.format);
  job.r = f.r;
  job.i = f.i;
  job.j = f.j;
  job.max_size = f.max_size;
  job.pit = f.pit;
  job.node_alpha = f.alpha;
  job.node_beta = f.beta;
  job.corpus = f.corpus;
  job.threads = f.threads;
  return job;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) throw qq::ValidationError("cannot write " + path);
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qqkit: exact qq-characters of quivers, Higgsing and affine partition sums"};
  app.require_subcommand(1);
  Flags f;
  std::optional<qq::Command> command;

  auto* expand = app.add_subcommand("expand", "iWeyl expansion of the highest weight");
  add_character(expand, f);
  expand->add_option("--higgs", f.higgs, "specialize the expanded character (JSON or @file)");
  expand->add_option("--limit", f.limit, "classical limit q1 or q2 after Higgsing");
  add_output(expand, f, "json (default), latex, dot, text");

  auto* higgs = app.add_subcommand("higgs", "expand, then specialize and drop vanishing terms");
  add_character(higgs, f);
  higgs->add_option("--higgs", f.higgs, "substitution, e.g. {\"x(1,2)\": \"x*q1\"} (JSON or @file)")->required();
  higgs->add_option("--limit", f.limit, "classical limit q1 or q2 after Higgsing");
  add_output(higgs, f, "json (default), latex, dot, text");

  auto* limit = app.add_subcommand("limit", "classical limit of the (optionally Higgsed) character");
  add_character(limit, f);
  limit->add_option("--higgs", f.higgs, "specialize before the limit (JSON or @file)");
  limit->add_option("--limit", f.limit, "q1 or q2")->required();
  add_output(limit, f, "json (default), latex, text");

  auto* hasse = app.add_subcommand("hasse", "reflection graph of the character");
  add_character(hasse, f);
  hasse->add_option("--higgs", f.higgs, "specialize before drawing (JSON or @file)");
  add_output(hasse, f, "dot (default), json, text");

  auto* affine = app.add_subcommand("affine-expand", "partition-sum character of a cyclic quiver");
  affine->add_option("--quiver", f.quiver, "A0hat or Arhat:r")->capture_default_str();
  affine->add_option("--w", f.w, "weights in node order or as JSON")->capture_default_str();
  affine->add_option("--params", f.params, "substitution for the weight parameters (JSON or @file)");
  affine->add_option("--max-deg", f.max_deg, "total box count cutoff")->required();
  add_output(affine, f, "json (default), latex, text");

  auto* burge = app.add_subcommand("burge-check", "resonance vanishing versus the pit or Burge filter");
  burge->add_option("--r", f.r, "cyclic rank")->capture_default_str();
  burge->add_option("--i", f.i, "first filter parameter")->capture_default_str();
  burge->add_option("--j", f.j, "second filter parameter")->capture_default_str();
  burge->add_option("--max-size", f.max_size, "largest total size enumerated")->capture_default_str();
  burge->add_flag("--pit", f.pit, "check the single-partition pit filter instead");
  burge->add_option("--alpha", f.alpha, "restrict to this first node");
  burge->add_option("--beta", f.beta, "restrict to this second node");
  add_output(burge, f, "json (default), text");

  auto* verify = app.add_subcommand("verify", "replay the fixture corpus");
  verify->add_option("--corpus", f.corpus, "fixture directory")->capture_default_str();
  add_output(verify, f, "text (default), json");

  auto* run = app.add_subcommand("run", "execute a JSON job file ('-' for stdin)");
  run->add_option("job", f.job_file, "job file")->required();
  run->add_option("--out", f.out, "write output to this file instead of stdout");

  expand->callback([&] { command = qq::Command::expand; });
  higgs->callback([&] { command = qq::Command::higgs; });
  limit->callback([&] { command = qq::Command::limit; });
  hasse->callback([&] { command = qq::Command::hasse; });
  affine->callback([&] { command = qq::Command::affine_expand; });
  burge->callback([&] { command = qq::Command::burge_check; });
  verify->callback([&] { command = qq::Command::verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(qq::ExitCode::validation);
  }

  try {
    qq::JobSpec job;
    if (command) {
      job = to_job(*command, f);
    } else {
      job = qq::job_from_json(read_value(f.job_file == "-" ? "-" : "@" + f.job_file));
      if (job.command == qq::Command::verify && job.corpus.empty()) job.corpus = QQKIT_DEFAULT_CORPUS;
    }
    qq::JobResult res = qq::run(job);
    emit(res.output, f.out);
    return static_cast<int>(res.code);
  } catch (const qq::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(qq::ExitCode::internal);
  }
}
