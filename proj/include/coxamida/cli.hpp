#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxamida {

/// Parsed command line of the coxamida tool.
struct RunConfig {
  std::string subcommand;           // "enum", "check" or "render"
  std::optional<int> n;
  std::optional<int> max_n;         // check only; exclusive with n
  std::vector<std::string> claims;  // resolved registry ids
  std::string word_csv;
  std::string path_csv;
  bool standard = false;
  std::string format = "text";      // "text" or "json"
  std::string out_path;             // empty = standard output
  int workers = 0;                  // 0 = automatic
  int budget_secs = 120;
};

/// Exit codes: 0 all pass, 1 any verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace coxamida
