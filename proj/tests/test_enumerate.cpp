#include "doctest.h"
#include "quadrimm/canon.hpp"
#include "quadrimm/census.hpp"
#include "quadrimm/enumerate.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/radial.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/transverse.hpp"
#include "quadrimm/validate.hpp"

using namespace quadrimm;

namespace {

Multigraph k4_pair() {
  Multigraph m(8);
  for (int base : {0, 4})
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) m.add_edge(base + a, base + b);
  return m;
}

}  // namespace

TEST_CASE("radial of the cube") {
  const auto r = radial(cube().map);
  CHECK(r.vertex_count() == 14);
  CHECK(validate_cq(r).passes());
  const auto eps = extract(r);
  CHECK_FALSE(eps.is_connected());
  CHECK(multigraph_isomorphic(eps, k4_pair()));
  // Two rounds of radial give back the extraction of the original.
  const auto r2 = radial(r);
  CHECK(validate_cq(r2).passes());
  CHECK(multigraph_isomorphic(extract(r2), extract(cube().map)));
}

TEST_CASE("radial keeps degrees and adds face vertices") {
  const auto g = ten_vertex_cq().map;
  const auto r = radial(g);
  CHECK(r.vertex_count() == g.vertex_count() + g.face_count());
  CHECK(r.edge_count() == 2 * g.edge_count());
  CHECK(validate_cq(r).passes());
}

TEST_CASE("small sphere counts") {
  const auto n8 = enumerate_cq(8);
  REQUIRE(n8.size() == 1);
  CHECK(canon_embedded(n8[0]) == canon_embedded(cube().map));
  CHECK(enumerate_cq(9).empty());
  const auto n10 = enumerate_cq(10);
  REQUIRE(n10.size() == 1);
  CHECK(canon_embedded(n10[0]) == canon_embedded(ten_vertex_cq().map));
  CHECK(enumerate_cq(12).size() == 2);
  CHECK(enumerate_cq(14).size() == 5);
  for (const auto& g : enumerate_cq(14)) CHECK(validate_cq(g).passes());
}

TEST_CASE("enumeration refuses sizes past its bound") {
  CHECK_THROWS_AS(enumerate_cq(20, 16), Error);
  CHECK_THROWS_AS(enumerate_cq_filtered(14, 12), Error);
}

TEST_CASE("graph-first oracle agrees with face growth") {
  for (int n = 8; n <= 11; ++n) {
    OracleStats stats;
    const auto oracle = enumerate_cq_filtered(n, 12, &stats);
    CHECK(codes_of(oracle) == codes_of(enumerate_cq(n)));
    CHECK(stats.not_triconnected == 0);
  }
}

TEST_CASE("odd sizes split the degree-3 vertices six and two") {
  for (const auto& g : enumerate_cq(13)) {
    const auto rep = validate_cq(g);
    REQUIRE(rep.block_degree_counts.has_value());
    const auto c = *rep.block_degree_counts;
    CHECK(std::min(c.a3, c.b3) == 2);
    CHECK_FALSE(extract(radial(g)).is_connected());
  }
}

TEST_CASE("cubic multigraph census on few vertices") {
  CHECK(census_connected_cubic_multigraphs(2).connected_count == 2);
  CHECK(census_connected_cubic_multigraphs(4).connected_count == 5);
  CHECK(census_connected_cubic_multigraphs(6).connected_count == 17);
  CHECK_THROWS_AS(census_connected_cubic_multigraphs(5), Error);
  CHECK_THROWS_AS(census_connected_cubic_multigraphs(10), Error);
  // Disconnected classes on 4 vertices are pairs of the two 2-vertex graphs.
  const auto all4 = census_all_cubic_multigraphs(4);
  CHECK(all4.connected_count == 5);
  CHECK(all4.disconnected_count == 3);
}

TEST_CASE("census does not depend on the seed") {
  const auto a = census_connected_cubic_multigraphs(6, 1);
  const auto b = census_connected_cubic_multigraphs(6, 99);
  CHECK(a.codes == b.codes);
}
