#include "lovelab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lovelab::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
  std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config line " + std::to_string(lineno) + ": empty key");
    std::replace(key.begin(), key.end(), '_', '-');
    out[key] = value;
  }
  return out;
}

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file " + *path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto entries = parse_config_text(buf.str());

  auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& a) { return a.rfind("-", 0) != 0; });
  if (sub == rest.end()) throw UsageError("a subcommand is required");
  std::vector<std::string> inserted;
  for (auto& [key, value] : entries) {
    if (has_flag(rest, key)) continue;
    inserted.push_back("--" + key);
    inserted.push_back(value);
  }
  rest.insert(sub + 1, inserted.begin(), inserted.end());
  return rest;
}

}  // namespace lovelab::cli
