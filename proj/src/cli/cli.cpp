#include "lovelab/cli.hpp"
#include "lovelab/conjectures.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace lovelab::cli {

namespace {

struct Options {
  RunConfig cfg;
  std::vector<double> kappas;
  double kappa_min = 0, kappa_max = 0;
  int kappa_count = 0;
  std::string format = "csv";
  std::string output;
  int threads = 0;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "write the table to this file instead of stdout");
  sub->add_option("--threads", o.threads, "worker count")->check(CLI::PositiveNumber);
}

void add_kappa_grid(CLI::App* sub, Options& o) {
  sub->add_option("--kappa", o.kappas, "kappa values, comma separated or repeated")->delimiter(',');
  sub->add_option("--kappa-min", o.kappa_min, "geometric grid start");
  sub->add_option("--kappa-max", o.kappa_max, "geometric grid end");
  sub->add_option("--kappa-count", o.kappa_count, "geometric grid size");
  sub->add_option("--nodes", o.cfg.n_nodes, "quadrature nodes, 0 for automatic");
}

std::vector<double> kappa_grid(const Options& o, const CLI::App* sub) {
  std::vector<double> ks = o.kappas;
  bool any = sub->count("--kappa-min") || sub->count("--kappa-max") || sub->count("--kappa-count");
  if (any) {
    if (!(sub->count("--kappa-min") && sub->count("--kappa-max") && sub->count("--kappa-count")))
      throw UsageError("--kappa-min, --kappa-max and --kappa-count go together");
    if (o.kappa_count < 1) throw UsageError("--kappa-count must be positive");
    if (!(o.kappa_min > 0 && o.kappa_max >= o.kappa_min))
      throw UsageError("geometric grid needs 0 < kappa-min <= kappa-max");
    for (int i = 0; i < o.kappa_count; ++i)
      ks.push_back(o.kappa_count == 1 ? o.kappa_min
                                      : o.kappa_min * std::pow(o.kappa_max / o.kappa_min,
                                                               double(i) / (o.kappa_count - 1)));
  }
  return ks;
}

bool user_passed(const std::vector<std::string>& args, const std::string& key) {
  std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

int env_threads() {
  const char* v = std::getenv("LOVE_LAB_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end || n < 1) throw UsageError("LOVE_LAB_THREADS must be a positive integer");
  return static_cast<int>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Love equation solver, capacitance asymptotics and conjecture checks", "love_lab"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "solve the Love equation on a kappa grid");
  add_kappa_grid(solve, o);
  add_common(solve, o);

  auto* fit = app.add_subcommand("fit-weak", "fit the gamma^2 coefficient of the weak-coupling energy");
  fit->add_option("--gamma-min", o.cfg.gamma_min, "smallest gamma");
  fit->add_option("--gamma-max", o.cfg.gamma_max, "largest gamma");
  fit->add_option("--gamma-count", o.cfg.gamma_count, "number of gamma points");
  fit->add_option("--synthetic", o.cfg.synthetic, "fit series data instead of solver data")
      ->check(CLI::IsMember({"takahashi", "kaminaka_wadati"}));
  add_common(fit, o);

  auto* verify = app.add_subcommand("verify", "check the integral conjectures");
  verify->add_option("--which", o.cfg.which, "conjecture name or group");
  verify->add_option("--tol", o.cfg.tol, "quadrature tolerance");
  add_common(verify, o);

  auto* compare = app.add_subcommand("compare-asymptotics", "numerical capacitance against the small-kappa series");
  add_kappa_grid(compare, o);
  add_common(compare, o);

  try {
    auto merged = merge_config(args);
    std::vector<std::string> rev(merged.rbegin(), merged.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    RunConfig& cfg = o.cfg;
    cfg.format = o.format == "json" ? Format::json : Format::csv;
    if (!o.output.empty()) cfg.output_path = o.output;
    int from_env = user_passed(args, "threads") ? 0 : env_threads();
    if (from_env > 0)
      cfg.threads = from_env;
    else if (o.threads > 0)
      cfg.threads = o.threads;
    else
      cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    CommandResult res;
    if (solve->parsed()) {
      cfg.command = Command::solve;
      cfg.kappas = kappa_grid(o, solve);
      res = cmd_solve(cfg);
    } else if (fit->parsed()) {
      cfg.command = Command::fit_weak;
      res = cmd_fit_weak(cfg);
    } else if (verify->parsed()) {
      cfg.command = Command::verify;
      res = cmd_verify(cfg);
    } else {
      cfg.command = Command::compare_asymptotics;
      if (!compare->count("--kappa") && !compare->count("--kappa-min"))
        cfg.kappas = {0.1, 0.05, 0.02};
      else
        cfg.kappas = kappa_grid(o, compare);
      res = cmd_compare_asymptotics(cfg);
    }

    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path);
      if (!file) throw UsageError("cannot write " + *cfg.output_path);
      write_table(res.table, cfg.format, file);
    } else {
      write_table(res.table, cfg.format, out);
    }
    for (auto& m : res.messages) err << m << "\n";
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical;
  }
}

}  // namespace lovelab::cli
