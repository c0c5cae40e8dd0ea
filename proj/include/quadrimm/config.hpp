#pragma once

#include <functional>
#include <string>

namespace quadrimm {

/// Run limits. Read from `key = value` lines; '#' starts a comment.
struct Config {
  int enum_max_n = 16;          // primary enumeration
  int oracle_max_n = 12;        // graph-first oracle
  int disk_max_boundary = 12;
  int disk_max_vertices = 30;
  long long node_budget = 0;    // search nodes per disk run, 0 = unlimited
  int workers = 1;
};

/// Throws Error(Parse) on unknown keys or bad values. QUADRIMM_WORKERS, when
/// set, overrides `workers`.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);
/// Defaults plus the environment override.
Config default_config();

/// Runs fn(0..count-1) on up to `workers` threads. The first exception is
/// rethrown after all threads finish.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace quadrimm
