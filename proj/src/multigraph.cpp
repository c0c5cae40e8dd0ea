#include "quadrimm/multigraph.hpp"

#include <algorithm>
#include <string>

#include "quadrimm/error.hpp"

namespace quadrimm {

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> edges) : vertex_count_(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    fail(ErrorKind::Structural, "multigraph edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(vertex_count_, 0);
  for (auto [a, b] : edges_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

int Multigraph::loop_count(int v) const {
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), std::pair{v, v}));
}

bool Multigraph::is_cubic() const {
  const auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

std::vector<int> Multigraph::components() const {
  std::vector<int> parent(vertex_count_);
  for (int i = 0; i < vertex_count_; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges_) parent[find(a)] = find(b);
  std::vector<int> label(vertex_count_, -1), out(vertex_count_);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    const int r = find(v);
    if (label[r] == -1) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  const auto c = components();
  return *std::max_element(c.begin(), c.end()) == 0;
}

std::vector<std::vector<int>> Multigraph::adjacency() const {
  std::vector<std::vector<int>> a(vertex_count_, std::vector<int>(vertex_count_, 0));
  for (auto [u, v] : edges_) {
    if (u == v) {
      ++a[u][u];
    } else {
      ++a[u][v];
      ++a[v][u];
    }
  }
  return a;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  Multigraph out(vertex_count_ + other.vertex_count_);
  for (auto [u, v] : edges_) out.add_edge(u, v);
  for (auto [u, v] : other.edges_) out.add_edge(u + vertex_count_, v + vertex_count_);
  return out;
}

Multigraph Multigraph::permuted(const std::vector<int>& perm) const {
  Multigraph out(vertex_count_);
  for (auto [u, v] : edges_) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace quadrimm
