#include "quadrimm/census.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "quadrimm/error.hpp"

namespace quadrimm {

namespace {

void check_n(int n) {
  if (n % 2 != 0) fail(ErrorKind::Precondition, "no cubic multigraph has an odd number of vertices (n=" + std::to_string(n) + ")");
  if (n < 2 || n > 8) fail(ErrorKind::Precondition, "census supports n in {2,4,6,8}, got " + std::to_string(n));
}

// Pairs stubs three per vertex. The first unfinished vertex is matched to
// targets taken in nondecreasing order, so each multigraph on the labelled
// vertices comes out exactly once.
class StubMatcher {
 public:
  StubMatcher(int n, std::uint64_t seed) : n_(n), free_(n, 3), order_(n) {
    std::iota(order_.begin(), order_.end(), 0);
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    step(visit, -1, 0);
  }

 private:
  template <class Visit>
  void step(Visit& visit, int current, int from) {
    int pos = 0;
    while (pos < n_ && free_[order_[pos]] == 0) ++pos;
    if (pos == n_) {
      visit(Multigraph(n_, edges_));
      return;
    }
    const int v = order_[pos];
    if (v != current) from = pos;
    --free_[v];
    for (int k = from; k < n_; ++k) {
      const int u = order_[k];
      if (free_[u] == 0) continue;
      --free_[u];
      edges_.emplace_back(v, u);
      step(visit, v, k);
      edges_.pop_back();
      ++free_[u];
    }
    ++free_[v];
  }

  int n_;
  std::vector<int> free_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> edges_;
};

CensusResult collect(int n, std::uint64_t seed, bool connected_only) {
  check_n(n);
  std::map<CanonicalCode, Multigraph> found;
  StubMatcher(n, seed).run([&](const Multigraph& m) {
    if (connected_only && !m.is_connected()) return;
    auto code = canon_multigraph(m);
    found.try_emplace(std::move(code), m);
  });
  CensusResult r;
  r.n = n;
  for (auto& [code, m] : found) {
    r.codes.push_back(code);
    r.classes.push_back(m);
    (m.is_connected() ? r.connected_count : r.disconnected_count)++;
  }
  return r;
}

}  // namespace

CensusResult census_connected_cubic_multigraphs(int n, std::uint64_t seed) { return collect(n, seed, true); }

CensusResult census_all_cubic_multigraphs(int n, std::uint64_t seed) { return collect(n, seed, false); }

CensusResult census_disconnected_8() {
  std::map<int, CensusResult> parts;
  for (int n : {2, 4, 6}) parts[n] = census_connected_cubic_multigraphs(n);
  const std::vector<std::vector<int>> partitions = {{2, 2, 2, 2}, {2, 2, 4}, {2, 6}, {4, 4}};
  CensusResult r;
  r.n = 8;
  std::map<CanonicalCode, Multigraph> found;
  for (const auto& sizes : partitions) {
    std::string name;
    for (int s : sizes) name += (name.empty() ? "" : "+") + std::to_string(s);
    // Choose a class index per part, nondecreasing within equal sizes.
    std::vector<int> pick(sizes.size(), 0);
    int count = 0;
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
      if (k == sizes.size()) {
        Multigraph m;
        for (std::size_t i = 0; i < sizes.size(); ++i) m = m.disjoint_union(parts[sizes[i]].classes[pick[i]]);
        ++count;
        found.try_emplace(canon_multigraph(m), m);
        return;
      }
      const int lo = k > 0 && sizes[k] == sizes[k - 1] ? pick[k - 1] : 0;
      for (int c = lo; c < static_cast<int>(parts[sizes[k]].classes.size()); ++c) {
        pick[k] = c;
        choose(k + 1);
      }
    };
    choose(0);
    r.partition_counts[name] = count;
  }
  for (auto& [code, m] : found) {
    r.codes.push_back(code);
    r.classes.push_back(m);
  }
  r.disconnected_count = static_cast<int>(found.size());
  return r;
}

std::vector<CanonicalCode> all_cubic_classes_8() {
  auto out = census_connected_cubic_multigraphs(8).codes;
  const auto d = census_disconnected_8().codes;
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

}  // namespace quadrimm
