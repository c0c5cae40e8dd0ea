#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "quadrimm/canon.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/map_ops.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/validate.hpp"

using namespace quadrimm;

namespace {

std::vector<int> sorted_face_lengths(const EmbeddedGraph& g) {
  std::vector<int> out;
  for (const auto& f : g.faces()) out.push_back(static_cast<int>(f.size()));
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddedGraph random_relabel(const EmbeddedGraph& g, std::mt19937& rng) {
  std::vector<int> edges(g.edge_count());
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<Dart> perm(g.dart_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool flip = rng() & 1;
    perm[2 * e] = 2 * edges[e] + flip;
    perm[2 * e + 1] = 2 * edges[e] + !flip;
  }
  return g.relabel(perm);
}

}  // namespace

TEST_CASE("face tracing") {
  CHECK(sorted_face_lengths(cube().map) == std::vector<int>(6, 4));
  CHECK(sorted_face_lengths(EmbeddedGraph({0, 1})) == std::vector<int>{2});
  CHECK(sorted_face_lengths(ten_vertex_cq().map) == std::vector<int>(8, 4));
  const auto ten = ten_vertex_cq();
  int total = 0;
  for (const auto& f : ten.map.faces()) total += static_cast<int>(f.size());
  CHECK(total == 32);
}

TEST_CASE("malformed rotation is rejected") {
  CHECK_THROWS_AS(EmbeddedGraph({0, 0}), Error);
  CHECK_THROWS_AS(EmbeddedGraph({0, 1, 2}), Error);
}

TEST_CASE("cube validates") {
  const auto r = validate_cq(cube().map);
  for (const auto& v : r.violations) MESSAGE(v);
  CHECK(r.passes());
  CHECK(r.nu3 == 8);
  CHECK(r.nu4 == 0);
  CHECK(r.faces == 6);
  REQUIRE(r.bipartition_blocks);
  CHECK(r.bipartition_blocks->first.size() == 4);
  CHECK(r.bipartition_blocks->second.size() == 4);
}

TEST_CASE("ten-vertex quadrangulation validates") {
  const auto m = ten_vertex_cq();
  const auto r = validate_cq(m.map);
  CHECK(r.passes());
  CHECK(r.vertices == 10);
  CHECK(r.nu4 == 2);
  CHECK(r.faces == 8);
  REQUIRE(r.block_degree_counts);
  const auto c = *r.block_degree_counts;
  CHECK(c.a3 + c.b3 == 8);
  CHECK(3 * c.a3 + 2 * (c.a4 - c.b4) == 12);
  CHECK(is_triconnected(m.map));
}

TEST_CASE("pentagon face is reported") {
  MapBuilder b(cube().map);
  b.subdivide(0);
  const auto r = validate_cq(b.build());
  CHECK_FALSE(r.passes());
  bool face_violation = false;
  for (const auto& v : r.violations) face_violation |= v.find("face") != std::string::npos;
  CHECK(face_violation);
}

TEST_CASE("bipartition") {
  const auto bp = bipartition(triangle().map);
  CHECK_FALSE(bp.bipartite);
  CHECK(bp.odd_cycle.size() == 3);
  const auto two = EmbeddedGraph({2, 3, 0, 1});
  CHECK(bipartition(cube().map).bipartite);
  // two disjoint edges
  CHECK_THROWS_AS(bipartition(EmbeddedGraph({0, 1, 2, 3})), Error);
  (void)two;
}

TEST_CASE("smoothing") {
  auto path = from_plane_drawing({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}});
  const auto s = smooth_vertex(path.map, path.vertex[1]);
  CHECK(s.vertex_count() == 2);
  CHECK(s.edge_count() == 1);
  auto square = from_plane_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto t = smooth_vertex(square.map, 0);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK_THROWS_AS(smooth_vertex(cube().map, 0), Error);
  CHECK_THROWS_AS(smooth_vertex(EmbeddedGraph({1, 0}), 0), Error);
}

TEST_CASE("dual") {
  const auto d = dual(cube().map);
  CHECK(d.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(d.degree(v) == 4);
  CHECK(sorted_face_lengths(d) == std::vector<int>(8, 3));
  CHECK(embedded_isomorphic(dual(d), cube().map));
  const auto q = dual(from_plane_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).map);
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 4);
  const auto t = dual(ten_vertex_cq().map);
  CHECK(t.vertex_count() == 8);
  for (int v = 0; v < 8; ++v) CHECK(t.degree(v) == 4);
}

TEST_CASE("embedded canonical code") {
  std::mt19937 rng(7);
  const auto g = ten_vertex_cq().map;
  const auto code = canon_embedded(g);
  for (int i = 0; i < 20; ++i) CHECK(canon_embedded(random_relabel(g, rng)) == code);
  CHECK(canon_embedded(g.mirror()) == code);
  CHECK(canon_embedded(g) != canon_embedded(cube().map));
  CHECK(CanonicalCode::from_hex(code.hex()) == code);
  const auto chiral = canon_embedded(g, false);
  CHECK(canon_embedded(random_relabel(g, rng), false) == chiral);
}

TEST_CASE("multigraph canonical code") {
  std::mt19937 rng(11);
  Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto code = canon_multigraph(k4);
  for (int i = 0; i < 10; ++i) {
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canon_multigraph(k4.permuted(perm)) == code);
  }
  Multigraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  Multigraph dumbbell(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(canon_multigraph(theta) != canon_multigraph(dumbbell));
  CHECK(canon_multigraph(k4.disjoint_union(theta)) == canon_multigraph(theta.disjoint_union(k4)));
  Multigraph path(13);
  for (int v = 0; v < 12; ++v) path.add_edge(v, v + 1);
  CHECK_THROWS_AS(canon_multigraph(path), Error);
}
