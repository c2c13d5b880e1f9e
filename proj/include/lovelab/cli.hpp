#pragma once

#include "lovelab/errors.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lovelab::cli {

// Exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_numerical = 1;
inline constexpr int exit_usage = 2;

struct UsageError : Error {
  using Error::Error;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

// 17 significant digits
std::string format_number(double v);
void write_table(const Table& t, Format f, std::ostream& os);

enum class Command { solve, fit_weak, verify, compare_asymptotics };

struct RunConfig {
  Command command = Command::solve;
  std::vector<double> kappas;
  double gamma_min = 2e-3;
  double gamma_max = 5e-2;
  int gamma_count = 8;
  int n_nodes = 0;  // 0: automatic
  double tol = 1e-12;
  Format format = Format::csv;
  std::optional<std::string> output_path;
  int threads = 1;
  std::string which = "all";
  std::string synthetic;  // fit-weak test hook: takahashi or kaminaka_wadati
};

struct CommandResult {
  Table table;
  int exit_code = exit_ok;
  std::vector<std::string> messages;
};

CommandResult cmd_solve(const RunConfig& cfg);
CommandResult cmd_fit_weak(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_compare_asymptotics(const RunConfig& cfg);

// "key = value" per line, '#' starts a comment.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Inserts config entries as flags after the subcommand unless the user
// already passed them; drops --config from the argument list.
std::vector<std::string> merge_config(const std::vector<std::string>& args);

// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace lovelab::cli
