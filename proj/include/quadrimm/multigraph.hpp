#pragma once

#include <utility>
#include <vector>

namespace quadrimm {

/// Abstract multigraph; loops and parallel edges allowed. A loop adds 2 to
/// the degree of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : vertex_count_(vertex_count) {}
  Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int u, int v);
  int degree(int v) const;
  std::vector<int> degrees() const;
  int loop_count(int v) const;
  bool is_cubic() const;
  bool is_connected() const;
  /// Component index per vertex; components numbered by smallest vertex.
  std::vector<int> components() const;
  /// Symmetric multiplicity matrix; diagonal entries count loops.
  std::vector<std::vector<int>> adjacency() const;

  /// Disjoint union with vertices of `other` shifted after ours.
  Multigraph disjoint_union(const Multigraph& other) const;
  Multigraph permuted(const std::vector<int>& perm) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace quadrimm
