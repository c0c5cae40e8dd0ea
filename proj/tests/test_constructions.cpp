#include <random>

#include "doctest.h"
#include "quadrimm/canon.hpp"
#include "quadrimm/constructions.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/transverse.hpp"
#include "quadrimm/validate.hpp"

using namespace quadrimm;

namespace {

DiskQuadrangulation as_disk(const LabeledMap& m) { return {m.map, m.outer}; }

int spoke_start(const DiskQuadrangulation& d) {
  const auto b = d.boundary();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (d.map.degree(b[i]) == 3) return static_cast<int>(i);
  return -1;
}

CablingWalk cube_walk(const EmbeddedGraph& g) {
  const std::vector<Turn> pattern{Turn::Right, Turn::Straight, Turn::Left, Turn::Right, Turn::Straight, Turn::Left};
  for (Dart d = 0; d < g.dart_count(); ++d) {
    const auto w = walk_from_turns(g, d, pattern);
    try {
      resolve_walk(g, w);
      return w;
    } catch (const Error&) {
    }
  }
  return {};
}

}  // namespace

TEST_CASE("gluing needs a degree-3 partner for every corner") {
  const auto quad = as_disk(quad_grid(1, 1));
  // Both quadrangle corners have degree 2, so they need degree 3 partners.
  CHECK_THROWS_AS(two_disks(quad, quad, {0, true}), Error);
  const auto strip = as_disk(quad_grid(1, 2));
  const auto tripod = as_disk(tripod_disk());
  // Four strip corners cannot all meet the three tripod spokes.
  for (int off = 0; off < 6; ++off) CHECK_THROWS_AS(two_disks(strip, tripod, {off, true}), Error);

  int built = 0;
  for (int off = 0; off < 6; ++off)
    for (bool rev : {true, false}) {
      try {
        const auto r = two_disks(tripod, tripod, {off, rev});
        CHECK(validate_cq(r.map).passes());
        CHECK(r.seam.size() == 6);
        ++built;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
      }
    }
  CHECK(built > 0);
}

TEST_CASE("glued seam degrees add up") {
  const auto a = as_disk(tripod_disk());
  const auto b = as_disk(tripod_disk());
  const auto r = two_disks(a, b, {1, true});
  const auto ba = a.boundary();
  const auto bb = b.boundary();
  for (int i = 0; i < 6; ++i)
    CHECK(r.map.degree(r.seam[i]) == a.map.degree(ba[i]) + b.map.degree(bb[(1 - i + 6) % 6]) - 2);
}

TEST_CASE("split then glue gives the same sphere") {
  for (const auto& g : {cube().map, ten_vertex_cq().map}) {
    const auto c = has_complete_transverse_cycle(g);
    REQUIRE(c.has_value());
    const auto s = split_along_cycle(g, *c);
    CHECK(validate_disk(s.left).valid);
    CHECK(validate_disk(s.right).valid);
    CHECK(canon_embedded(two_disks(s.left, s.right, s.phi).map) == canon_embedded(g));
  }
}

TEST_CASE("cube splits into a quadrangle and the rest") {
  const auto g = cube().map;
  const auto c = *has_complete_transverse_cycle(g);
  REQUIRE(c.vertices.size() == 4);
  const auto s = split_along_cycle(g, c);
  const int small = std::min(s.left.map.face_count(), s.right.map.face_count());
  const int large = std::max(s.left.map.face_count(), s.right.map.face_count());
  CHECK(small == 2);
  CHECK(large == 6);
}

TEST_CASE("random gluings of small disks") {
  const auto all = enumerate_disks(8, 12, false);
  std::mt19937 rng(7);
  int built = 0;
  for (int t = 0; t < 300; ++t) {
    const auto& a = all.disks[rng() % all.disks.size()];
    const auto& b = all.disks[rng() % all.disks.size()];
    const int n = static_cast<int>(a.boundary().size());
    if (static_cast<int>(b.boundary().size()) != n) continue;
    const BoundaryBijection phi{static_cast<int>(rng() % n), rng() % 2 == 0};
    try {
      const auto r = two_disks(a, b, phi);
      REQUIRE(validate_cq(r.map).passes());
      const auto c = has_complete_transverse_cycle(r.map);
      REQUIRE(c.has_value());
      const auto s = split_along_cycle(r.map, *c);
      CHECK(canon_embedded(two_disks(s.left, s.right, s.phi).map) == canon_embedded(r.map));
      ++built;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }
  CHECK(built > 50);
}

TEST_CASE("auto fix unbuffers a doubly buffered pair") {
  const auto tripod = as_disk(tripod_disk());
  const auto strip = as_disk(quad_grid(1, 2));
  const auto plain = two_disks(tripod, buffer(strip), {0, true}, true);
  const auto fixed = two_disks(buffer(tripod), buffer(strip), {0, true}, true);
  CHECK(validate_cq(fixed.map).passes());
  CHECK(canon_embedded(fixed.map) == canon_embedded(plain.map));
  CHECK_FALSE(fixed.notes.empty());

  const auto raw = two_disks(buffer(tripod), buffer(strip), {0, true}, false);
  CHECK(validate_cq(raw.map).passes());
  REQUIRE_FALSE(raw.notes.empty());
  CHECK(raw.notes.back().rfind("warning", 0) == 0);
}

TEST_CASE("spiral on the tripod") {
  const auto tripod = as_disk(tripod_disk());
  const int s = spoke_start(tripod);
  CHECK(spiral({tripod, s, 1}).vertex_count() == 8);
  CHECK(canon_embedded(spiral({tripod, s, 1})) == canon_embedded(cube().map));
  CHECK_THROWS_AS(spiral({tripod, s, 2}), Error);
  CHECK_THROWS_AS(spiral({tripod, s + 1, 3}), Error);  // label 0 would be a corner
  CHECK_THROWS_AS(spiral({tripod, s, 0}), Error);
  for (int l = 3; l <= 9; ++l) {
    const auto g = spiral({tripod, s, l});
    CHECK(g.vertex_count() == 7 + l);
    CHECK(validate_cq(g).passes());
  }
  for (int l = 3; l <= 6; ++l)
    CHECK(canon_multigraph(extract(spiral({tripod, s, l}))) == canon_multigraph(extract(spiral({tripod, s, l + 5}))));
}

TEST_CASE("turn classification") {
  const auto g = cube().map;
  const Dart d = 0;
  const auto t = classify_turn(g, d);
  CHECK(t.straight == g.face_next(g.face_next(d)));
  CHECK(g.face_of(t.right) == g.face_of(d));
  CHECK(g.face_of(t.left) == g.face_of(d));
  // Going straight around the cube returns after four faces.
  const auto w = walk_from_turns(g, d, std::vector<Turn>(4, Turn::Straight));
  Dart cur = d;
  for (int i = 0; i < 4; ++i) cur = EmbeddedGraph::pair(classify_turn(g, cur).straight);
  CHECK(cur == d);
  CHECK(w.edges.size() == 4);
  CHECK_THROWS_AS(resolve_walk(g, w), Error);  // no turns at all
}

TEST_CASE("walk text round trip") {
  const auto w = parse_walk("e3R e7S # comment\n e9L");
  REQUIRE(w.edges.size() == 3);
  CHECK(w.edges[2] == 9);
  CHECK(w.turns[1] == Turn::Straight);
  CHECK(format_walk(w) == "e3R e7S e9L");
  CHECK_THROWS_AS(parse_walk("e3X"), Error);
  CHECK_THROWS_AS(parse_walk("f3R"), Error);
}

TEST_CASE("cable on the cube") {
  const auto g = cube().map;
  const auto w = cube_walk(g);
  REQUIRE(w.edges.size() == 6);
  const auto r = resolve_walk(g, w);
  CHECK(r.right.size() == 2);
  CHECK(r.left.size() == 2);
  CHECK(r.period() == 4);
  CHECK(cable(g, w, 0) == g);
  std::vector<CanonicalCode> eps;
  for (int c = 0; c <= 7; ++c) {
    const auto h = cable(g, w, c);
    CHECK(validate_cq(h).passes());
    eps.push_back(canon_multigraph(extract(h)));
  }
  for (int c = 0; c + 4 <= 7; ++c) CHECK(eps[c] == eps[c + 4]);
  bool shorter = true;
  for (int c = 0; c + 2 <= 7; ++c) shorter = shorter && eps[c] == eps[c + 2];
  CHECK_FALSE(shorter);
  CHECK_THROWS_AS(cable(g, w, -1), Error);
}
