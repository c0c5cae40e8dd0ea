#include "quadrimm/validate.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "quadrimm/error.hpp"

namespace quadrimm {

Bipartition bipartition(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  Bipartition out;
  if (n == 0) {
    out.bipartite = true;
    return out;
  }
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  std::deque<int> queue{0};
  side[0] = 0;
  std::pair<int, int> conflict{-1, -1};
  while (!queue.empty() && conflict.first < 0) {
    const int v = queue.front();
    queue.pop_front();
    for (Dart d : g.darts_at(v)) {
      const int w = g.head_of(d);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        parent[w] = v;
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        conflict = {v, w};
        break;
      }
    }
  }
  if (conflict.first < 0) {
    for (int v = 0; v < n; ++v)
      if (side[v] < 0)
        fail(ErrorKind::Precondition, "graph is disconnected; vertex " + std::to_string(v) + " is unreachable from vertex 0");
  }
  if (conflict.first >= 0) {
    // Tree paths from both ends up to their lowest common ancestor.
    auto [u, w] = conflict;
    std::vector<int> left, right;
    while (u != w) {
      if (depth[u] >= depth[w]) {
        left.push_back(u);
        u = parent[u];
      } else {
        right.push_back(w);
        w = parent[w];
      }
    }
    left.push_back(u);
    out.odd_cycle = left;
    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
    return out;
  }
  out.bipartite = true;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? out.block_a : out.block_b).push_back(v);
  return out;
}

ValidationReport validate_cq(const EmbeddedGraph& g) {
  ValidationReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.faces = g.face_count();
  r.is_connected = g.is_connected();
  r.is_spherical = g.is_spherical();
  r.is_simple = g.is_simple();
  for (const auto& f : g.faces()) r.face_lengths.push_back(static_cast<int>(f.size()));
  std::sort(r.face_lengths.begin(), r.face_lengths.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++r.degree_counts[g.degree(v)];
    if (g.degree(v) == 3) ++r.nu3;
    if (g.degree(v) == 4) ++r.nu4;
  }

  auto& bad = r.violations;
  if (!r.is_connected) bad.push_back("not connected");
  else if (!r.is_spherical) bad.push_back("Euler characteristic is " + std::to_string(g.euler_characteristic()) + ", expected 2");
  if (g.has_loop()) bad.push_back("has a loop");
  if (g.has_parallel_edges()) bad.push_back("has parallel edges");
  for (int f = 0; f < g.face_count(); ++f)
    if (g.face(f).size() != 4) {
      bad.push_back("face " + std::to_string(f) + " has length " + std::to_string(g.face(f).size()));
      break;
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3 && g.degree(v) != 4) {
      bad.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
      break;
    }
  if (!bad.empty() || !r.is_connected) return r;

  if (r.nu3 != 8) bad.push_back("expected 8 vertices of degree 3, found " + std::to_string(r.nu3));
  if (r.faces != 6 + r.nu4)
    bad.push_back("face count " + std::to_string(r.faces) + " differs from 6 + nu4 = " + std::to_string(6 + r.nu4));

  const auto bp = bipartition(g);
  if (!bp.bipartite) {
    bad.push_back("not bipartite; odd cycle of length " + std::to_string(bp.odd_cycle.size()));
    return r;
  }
  r.bipartition_blocks = std::make_pair(bp.block_a, bp.block_b);
  BlockDegreeCounts c;
  for (int v : bp.block_a) (g.degree(v) == 3 ? c.a3 : c.a4)++;
  for (int v : bp.block_b) (g.degree(v) == 3 ? c.b3 : c.b4)++;
  r.block_degree_counts = c;
  if (3 * c.a3 + 2 * (c.a4 - c.b4) != 12) bad.push_back("block identity 3*a3 + 2*(a4 - b4) = 12 fails");
  if (r.vertices % 2 == 1) {
    const auto lo = std::min(c.a3, c.b3), hi = std::max(c.a3, c.b3);
    if (lo != 2 || hi != 6) bad.push_back("odd vertex count but degree-3 split is not {6,2}");
  }
  return r;
}

namespace {

// Articulation-point test on the simple underlying graph, skipping vertices
// marked removed.
bool connected_without(const EmbeddedGraph& g, int skip_a, int skip_b) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (v != skip_a && v != skip_b) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_at(v)) {
      const int w = g.head_of(d);
      if (w == skip_a || w == skip_b || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == alive;
}

}  // namespace

bool is_biconnected(const EmbeddedGraph& g) {
  if (g.vertex_count() < 3 || !g.is_connected()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!connected_without(g, v, -1)) return false;
  return true;
}

bool is_triconnected(const EmbeddedGraph& g) {
  if (g.vertex_count() < 4 || !is_biconnected(g)) return false;
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (!connected_without(g, a, b)) return false;
  return true;
}

}  // namespace quadrimm
