#include "quadrimm/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "hole_filler.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/validate.hpp"

namespace quadrimm {

namespace {

std::vector<EmbeddedGraph> sorted_values(std::map<CanonicalCode, EmbeddedGraph>& found) {
  std::vector<EmbeddedGraph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<EmbeddedGraph> enumerate_cq(int n, int max_n) {
  if (n > max_n)
    fail(ErrorKind::Budget, "n=" + std::to_string(n) + " exceeds the enumeration budget " + std::to_string(max_n) +
                                "; search size grows roughly 1.5x per vertex (n=22 takes about a second)");
  std::map<CanonicalCode, EmbeddedGraph> found;
  if (n < 8) return {};
  detail::FillState start;
  start.adj = {{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  start.min_deg.assign(4, 3);
  start.max_deg.assign(4, 4);
  start.holes = {{0, 1, 2, 3}};
  detail::FillOptions opt;
  opt.max_vertices = n;
  opt.emit = [&](const detail::FillState& s) {
    if (s.vertex_count() != n) return;
    auto g = s.build();
    if (!validate_cq(g).passes()) fail(ErrorKind::Structural, "enumerator produced an invalid quadrangulation");
    auto code = canon_embedded(g);
    found.try_emplace(std::move(code), std::move(g));
  };
  detail::fill_holes(start, opt);
  for (const auto& [code, g] : found)
    if (!is_biconnected(g)) fail(ErrorKind::Structural, "enumerated quadrangulation is not 2-connected: " + code.hex());
  return sorted_values(found);
}

// ---------------------------------------------------------------------------

namespace {

using Row = std::uint32_t;  // neighbour set over the second block

class BipartiteOracle {
 public:
  BipartiteOracle(int n, int a, OracleStats& stats) : n_(n), a_(a), b_(n - a), stats_(stats) {
    for (Row r = 0; r < (Row(1) << b_); ++r) {
      const int k = std::popcount(r);
      if (k == 3 || k == 4) options_.push_back(r);
    }
    // Largest first, so rows come out lexicographically nonincreasing
    // (column 0 is the most significant bit).
    std::sort(options_.begin(), options_.end(), [&](Row x, Row y) { return key(x) > key(y); });
    rows_.resize(a_);
    col_sum_.assign(b_, 0);
  }

  void run(std::map<CanonicalCode, EmbeddedGraph>& found) {
    found_ = &found;
    place(0, 0, 0);
  }

 private:
  Row key(Row r) const {
    Row k = 0;
    for (int j = 0; j < b_; ++j)
      if (r >> j & 1) k |= Row(1) << (b_ - 1 - j);
    return k;
  }

  // Columns must stay lexicographically nonincreasing read top to bottom.
  bool columns_ordered(int rows) const {
    for (int j = 0; j + 1 < b_; ++j) {
      for (int i = 0; i < rows; ++i) {
        const int x = rows_[i] >> j & 1, y = rows_[i] >> (j + 1) & 1;
        if (x > y) break;
        if (x < y) return false;
      }
    }
    return true;
  }

  void place(int i, std::size_t from, int edges) {
    if (i == a_) {
      if (edges != 2 * n_ - 4) return;
      for (int j = 0; j < b_; ++j)
        if (col_sum_[j] < 3) return;
      finish();
      return;
    }
    const int rows_left = a_ - i;
    for (std::size_t k = from; k < options_.size(); ++k) {
      const Row r = options_[k];
      const int size = std::popcount(r);
      const int total = edges + size;
      if (total + 3 * (rows_left - 1) > 2 * n_ - 4 || total + 4 * (rows_left - 1) < 2 * n_ - 4) continue;
      bool ok = true;
      for (int j = 0; j < b_ && ok; ++j)
        if ((r >> j & 1) && col_sum_[j] == 4) ok = false;
      if (!ok) continue;
      rows_[i] = r;
      if (!columns_ordered(i + 1)) continue;
      // Each column still needs enough room to reach degree 3.
      for (int j = 0; j < b_; ++j) col_sum_[j] += r >> j & 1;
      bool feasible = true;
      for (int j = 0; j < b_; ++j)
        if (col_sum_[j] + (rows_left - 1) < 3) feasible = false;
      if (feasible) place(i + 1, k, total);
      for (int j = 0; j < b_; ++j) col_sum_[j] -= r >> j & 1;
    }
  }

  void finish() {
    ++stats_.matrices;
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                        boost::property<boost::edge_index_t, int>>;
    Graph g(n_);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < b_; ++j)
        if (rows_[i] >> j & 1) boost::add_edge(i, a_ + j, g);
    int index = 0;
    auto edge_index = boost::get(boost::edge_index, g);
    for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(edge_index, *it, index++);

    // Quick connectivity and cut-vertex screen before the planarity test.
    std::vector<std::vector<int>> nbr(n_);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < b_; ++j)
        if (rows_[i] >> j & 1) {
          nbr[i].push_back(a_ + j);
          nbr[a_ + j].push_back(i);
        }
    if (!biconnected(nbr)) return;

    using Embedding = std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>>;
    Embedding embedding(n_);
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                             boost::boyer_myrvold_params::embedding = &embedding[0]))
      return;
    ++stats_.planar;
    std::vector<std::vector<int>> rotation(n_);
    for (int v = 0; v < n_; ++v)
      for (const auto& e : embedding[v]) {
        const int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
        rotation[v].push_back(s == v ? t : s);
      }
    auto emb = EmbeddedGraph::from_rotation_lists(rotation);
    if (!validate_cq(emb).passes()) return;
    if (!is_triconnected(emb)) ++stats_.not_triconnected;
    auto code = canon_embedded(emb);
    found_->try_emplace(std::move(code), std::move(emb));
  }

  bool biconnected(const std::vector<std::vector<int>>& nbr) const {
    for (int skip = -1; skip < n_; ++skip) {
      std::vector<char> seen(n_, 0);
      const int start = skip == 0 ? 1 : 0;
      std::vector<int> stack{start};
      seen[start] = 1;
      int count = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : nbr[v])
          if (w != skip && !seen[w]) {
            seen[w] = 1;
            ++count;
            stack.push_back(w);
          }
      }
      if (count != n_ - (skip >= 0 ? 1 : 0)) return false;
    }
    return true;
  }

  int n_, a_, b_;
  OracleStats& stats_;
  std::vector<Row> options_;
  std::vector<Row> rows_;
  std::vector<int> col_sum_;
  std::map<CanonicalCode, EmbeddedGraph>* found_ = nullptr;
};

}  // namespace

std::vector<EmbeddedGraph> enumerate_cq_filtered(int n, int max_n, OracleStats* stats) {
  if (n > max_n)
    fail(ErrorKind::Budget, "n=" + std::to_string(n) + " exceeds the oracle budget " + std::to_string(max_n) +
                                "; the graph-first search grows exponentially in n");
  OracleStats local;
  OracleStats& s = stats ? *stats : local;
  std::map<CanonicalCode, EmbeddedGraph> found;
  // Block sizes a <= b with 3a <= 2n-4 <= 4a for both blocks.
  for (int a = 1; 2 * a <= n; ++a) {
    const int b = n - a;
    const int m = 2 * n - 4;
    if (3 * a > m || 4 * a < m || 3 * b > m || 4 * b < m) continue;
    BipartiteOracle(n, a, s).run(found);
  }
  return sorted_values(found);
}

std::vector<CanonicalCode> codes_of(const std::vector<EmbeddedGraph>& graphs) {
  std::vector<CanonicalCode> out;
  for (const auto& g : graphs) out.push_back(canon_embedded(g));
  return out;
}

}  // namespace quadrimm
