#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quadrimm/embedded_graph.hpp"

namespace quadrimm::detail {

// Partial quadrangulation: every placed face is a quadrangle, and the still
// unfilled regions ("holes") are bounded by simple cycles. At hole position m
// the gap runs counterclockwise from hole[m+1] to hole[m-1] in the
// neighbour list of hole[m].
struct FillState {
  std::vector<std::vector<int>> adj;  // counterclockwise neighbours
  std::vector<std::int8_t> min_deg, max_deg;
  std::vector<std::vector<int>> holes;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  /// Number of holes through each vertex.
  std::vector<int> hole_membership() const;
  EmbeddedGraph build(std::vector<int>* vertex_ids = nullptr) const;
};

struct FillOptions {
  int max_vertices = 0;
  int new_min_deg = 3;
  int new_max_deg = 4;
  long long node_budget = 0;  // 0 = unlimited
  // Return true to abandon the branch.
  std::function<bool(const FillState&, const std::vector<int>& membership)> prune;
  std::function<void(const FillState&)> emit;
};

/// Depth-first filling of all holes. Throws Error(Budget) past the node budget.
/// Returns the number of search nodes visited.
long long fill_holes(const FillState& start, const FillOptions& options);

}  // namespace quadrimm::detail
