#include "lovelab/cli.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace lovelab::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return format_number(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string json_cell(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return std::isfinite(*d) ? format_number(*d) : "null";
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return nlohmann::json(std::get<std::string>(c)).dump();
}

}  // namespace

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::csv) {
    for (size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
    os << "\n";
    for (auto& row : t.rows) {
      for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
      os << "\n";
    }
    return;
  }
  os << "[";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    os << (i ? ",\n  {" : "\n  {");
    for (size_t j = 0; j < t.columns.size(); ++j)
      os << (j ? ", " : "") << nlohmann::json(t.columns[j]).dump() << ": " << json_cell(t.rows[i][j]);
    os << "}";
  }
  os << (t.rows.empty() ? "]\n" : "\n]\n");
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace lovelab::cli
