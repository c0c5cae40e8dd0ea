#include "quadrimm/standard_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quadrimm {

namespace {

// Dart from vertex index a to vertex index b in a built map.
Dart find_dart(const LabeledMap& m, int a, int b) {
  for (Dart d : m.map.darts_at(m.vertex[a]))
    if (m.map.head_of(d) == m.vertex[b]) return d;
  return -1;
}

}  // namespace

LabeledMap from_plane_drawing(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> nbr(n);
  for (auto [u, v] : edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto angle = [&](int w) { return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first); };
    std::sort(nbr[v].begin(), nbr[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  LabeledMap m;
  m.map = EmbeddedGraph::from_rotation_lists(nbr, &m.vertex);
  return m;
}

LabeledMap cube() {
  return from_plane_drawing({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

LabeledMap ten_vertex_cq() {
  // u at the centre, w at infinity, so w sees its neighbours clockwise.
  std::vector<std::vector<int>> nbr(10);
  nbr[0] = {1, 2, 3, 4};
  for (int k = 0; k < 4; ++k) {
    const int rim = 1 + k, after = 5 + k, before = 5 + (k + 3) % 4;
    nbr[rim] = {after, 0, before};
    nbr[after] = {9, 1 + (k + 1) % 4, rim};
  }
  nbr[9] = {8, 7, 6, 5};
  LabeledMap m;
  m.map = EmbeddedGraph::from_rotation_lists(nbr, &m.vertex);
  return m;
}

LabeledMap triangle() { return from_plane_drawing({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}); }

LabeledMap quad_strip(int k) { return quad_grid(1, k); }

LabeledMap quad_grid(int rows, int cols) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int r, int c) { return r * (cols + 1) + c; };
  for (int r = 0; r <= rows; ++r)
    for (int c = 0; c <= cols; ++c) {
      pts.emplace_back(c, -r);
      if (c < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  auto m = from_plane_drawing(pts, edges);
  // Walking east along the bottom row keeps the outside on the right.
  m.outer = find_dart(m, id(rows, 0), id(rows, 1));
  return m;
}

LabeledMap tripod_disk() {
  std::vector<std::pair<double, double>> pts(7);
  const double pi = std::numbers::pi;
  pts[0] = {0, 0};
  for (int k = 0; k < 3; ++k) {
    const double a = pi / 2 + 2 * pi * k / 3, b = a + pi / 3;
    pts[1 + k] = {std::cos(a), std::sin(a)};
    pts[4 + k] = {2 * std::cos(b), 2 * std::sin(b)};
  }
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < 3; ++k) {
    edges.emplace_back(0, 1 + k);
    edges.emplace_back(1 + k, 4 + k);
    edges.emplace_back(4 + k, 1 + (k + 1) % 3);
  }
  auto m = from_plane_drawing(pts, edges);
  // Counterclockwise around the drawing keeps the outside on the right.
  m.outer = find_dart(m, 1, 4);
  return m;
}

}  // namespace quadrimm
