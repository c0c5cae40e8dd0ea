#include "quadrimm/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "quadrimm/error.hpp"
#include "quadrimm/io.hpp"

namespace quadrimm {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

long long parse_number(const std::string& value, int line_no, long long lo) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || v < lo)
    fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad value '" + value + "'");
  return v;
}

void apply_env(Config& c) {
  if (const char* w = std::getenv("QUADRIMM_WORKERS")) {
    const std::string text = w;
    if (!text.empty()) c.workers = static_cast<int>(parse_number(text, 0, 1));
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "enum_max_n") c.enum_max_n = static_cast<int>(parse_number(value, line_no, 8));
    else if (key == "oracle_max_n") c.oracle_max_n = static_cast<int>(parse_number(value, line_no, 8));
    else if (key == "disk_max_boundary") c.disk_max_boundary = static_cast<int>(parse_number(value, line_no, 4));
    else if (key == "disk_max_vertices") c.disk_max_vertices = static_cast<int>(parse_number(value, line_no, 4));
    else if (key == "node_budget") c.node_budget = parse_number(value, line_no, 0);
    else if (key == "workers") c.workers = static_cast<int>(parse_number(value, line_no, 1));
    else fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  apply_env(c);
  return c;
}

Config load_config(const std::string& path) { return parse_config(read_file(path)); }

Config default_config() { return parse_config(""); }

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex lock;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace quadrimm
