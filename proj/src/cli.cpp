#include "coxamida/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "coxamida/amida.hpp"
#include "coxamida/coxeter.hpp"
#include "coxamida/json_io.hpp"
#include "coxamida/longest.hpp"
#include "coxamida/oracle.hpp"
#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

namespace coxamida {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("COXAMIDA_WORKERS")) {
    try {
      const int parsed = std::stoi(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
    }
  }
  return 0;  // automatic
}

// Writes to --out when given, standard output otherwise.
class OutputTarget {
public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
  return out.str();
}

int run_enum(const RunConfig& config, std::ostream& out_stream, std::ostream&) {
  const int n = *config.n;
  if (n < 3 || n > 20)
    throw std::invalid_argument("enum: --n must be in 3..20, got " + std::to_string(n));
  OutputTarget target(config.out_path, out_stream);
  std::ostream& out = target.stream();

  const bool even = n % 2 == 0;
  const char* flag_name = even ? "longest" : "admissible";
  nlohmann::json entries = nlohmann::json::array();
  for (const CoxeterPath& p : enumerate_paths(n)) {
    const GeneratorWord word = word_from_path(p);
    const Permutation element = cyclic_permutation(p);
    const CyclicPresentation cycle = stanza_decomposition(p);
    const bool flag = even ? even_affords_longest(p) : is_admissible(p);
    if (config.format == "json") {
      nlohmann::json entry = {
          {"path", to_csv(p)},
          {"word", to_csv(word)},
          {"perm", to_one_line(element)},
          {"height", height(p)},
          {"stanza_starts", cycle.stanza_starts},
          {"costanza_starts", cycle.costanza_starts},
      };
      entry[even ? "affords_longest" : "admissible"] = flag;
      entries.push_back(std::move(entry));
    } else {
      out << "path=" << to_csv(p) << " word=" << to_csv(word) << " perm=" << to_one_line(element)
          << " height=" << height(p) << " stanzas=" << join_ints(cycle.stanza_starts)
          << " costanzas=" << join_ints(cycle.costanza_starts) << ' ' << flag_name << '='
          << (flag ? "yes" : "no") << '\n';
    }
  }
  if (config.format == "json") out << entries.dump(2) << '\n';
  return kExitPass;
}

std::string report_text_line(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.pass ? "[PASS] " : "[FAIL] ") << report.claim << " n=" << report.n;
  out << " expected=" << (report.expected ? std::to_string(*report.expected) : "none");
  out << " computed=" << (report.computed ? std::to_string(*report.computed) : "none");
  out << " (" << report.elapsed_ms << " ms)";
  if (!report.pass && !report.witnesses.empty()) {
    out << " witnesses:";
    for (const std::string& w : report.witnesses) out << " [" << w << "]";
  }
  return out.str();
}

int run_check(const RunConfig& config, std::ostream& out_stream, std::ostream& err) {
  OutputTarget target(config.out_path, out_stream);
  std::ostream& out = target.stream();

  VerifyOptions options;
  options.workers = config.workers;
  options.budget_secs = config.budget_secs;

  // Bounds are checked for every selected claim before any work starts.
  if (config.n)
    for (const std::string& id : config.claims)
      if (!claim_info(id).accepts(*config.n))
        throw std::invalid_argument("claim '" + id + "' does not accept n = " +
                                    std::to_string(*config.n) + " (parity or range)");

  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const std::string& id : config.claims) {
    const ClaimInfo& info = claim_info(id);
    std::vector<int> degrees;
    if (config.n) {
      degrees.push_back(*config.n);
    } else {
      std::vector<int> skipped;
      for (int n = 3; n <= *config.max_n; ++n)
        (info.accepts(n) ? degrees : skipped).push_back(n);
      if (!skipped.empty())
        err << "notice: " << id << ": skipping n = " << join_ints(skipped)
            << " (parity or exhaustive range)\n";
    }
    for (int n : degrees) {
      const VerificationReport report = verify(n, id, options);
      all_pass = all_pass && report.pass;
      if (config.format == "json")
        reports.push_back(report);
      else
        out << report_text_line(report) << '\n';
    }
  }
  if (config.format == "json") out << reports.dump(2) << '\n';
  return all_pass ? kExitPass : kExitFail;
}

int run_render(const RunConfig& config, std::ostream& out_stream, std::ostream&) {
  const int n = *config.n;
  AmidaDiagram diagram(1, {});
  if (!config.path_csv.empty()) {
    diagram = standard_from_coxeter_word(word_from_path(parse_path(n, config.path_csv)));
  } else {
    const GeneratorWord word = parse_word(n, config.word_csv);
    diagram = config.standard ? standard_from_coxeter_word(word) : from_word(word);
  }
  OutputTarget target(config.out_path, out_stream);
  target.stream() << render_ascii(diagram) << '\n';
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter elements of the symmetric group and the longest element:\n"
               "enumeration, exhaustive verification and Amida diagram rendering."};
  app.require_subcommand(1);

  RunConfig config;
  int n_flag = 0;
  int max_n_flag = 0;
  std::string claims_flag = "all";

  CLI::App* cmd_enum = app.add_subcommand("enum", "List all Coxeter elements of one degree");
  cmd_enum->add_option("--n", n_flag, "degree (3..20)")->required();
  cmd_enum->add_option("--format", config.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_enum->add_option("--out", config.out_path, "output file (default: stdout)");

  CLI::App* cmd_check = app.add_subcommand("check", "Verify the classification claims");
  CLI::Option* n_opt = cmd_check->add_option("--n", n_flag, "single degree");
  CLI::Option* max_n_opt =
      cmd_check->add_option("--max-n", max_n_flag, "all feasible degrees 3..max");
  n_opt->excludes(max_n_opt);
  max_n_opt->excludes(n_opt);
  cmd_check->add_option("--claims", claims_flag, "comma-separated claim ids, or 'all'");
  cmd_check->add_option("--format", config.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_check->add_option("--out", config.out_path, "output file (default: stdout)");
  cmd_check->add_option("--workers", config.workers, "census worker threads");
  cmd_check->add_option("--budget-secs", config.budget_secs, "time budget for heavy cross-checks");

  CLI::App* cmd_render = app.add_subcommand("render", "Render an Amida diagram as ASCII");
  cmd_render->add_option("--n", n_flag, "degree")->required();
  CLI::Option* word_opt = cmd_render->add_option("--word", config.word_csv, "generator word CSV");
  CLI::Option* path_opt = cmd_render->add_option("--path", config.path_csv, "sign sequence CSV");
  word_opt->excludes(path_opt);
  path_opt->excludes(word_opt);
  cmd_render->add_flag("--standard", config.standard,
                       "draw the standard diagram (word must be a Coxeter word)");
  cmd_render->add_option("--out", config.out_path, "output file (default: stdout)");

  std::vector<const char*> argv;
  argv.push_back("coxamida");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_enum)) {
      config.subcommand = "enum";
      config.n = n_flag;
      return run_enum(config, out, err);
    }
    if (app.got_subcommand(cmd_check)) {
      config.subcommand = "check";
      if (n_opt->count() > 0) config.n = n_flag;
      if (max_n_opt->count() > 0) config.max_n = max_n_flag;
      if (!config.n && !config.max_n)
        throw std::invalid_argument("check: one of --n or --max-n is required");
      if (config.max_n && *config.max_n < 3)
        throw std::invalid_argument("check: --max-n must be at least 3");
      config.workers = resolve_workers(config.workers);
      if (claims_flag == "all") {
        for (const ClaimInfo& info : claim_registry()) config.claims.push_back(info.id);
      } else {
        std::istringstream in(claims_flag);
        std::string id;
        while (std::getline(in, id, ',')) {
          claim_info(id);  // throws on unknown ids
          config.claims.push_back(id);
        }
        if (config.claims.empty()) throw std::invalid_argument("check: empty claim list");
      }
      return run_check(config, out, err);
    }
    config.subcommand = "render";
    config.n = n_flag;
    if (word_opt->count() == 0 && path_opt->count() == 0)
      throw std::invalid_argument("render: one of --word or --path is required");
    return run_render(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace coxamida
