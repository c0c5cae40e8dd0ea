#include "doctest.h"
#include "quadrimm/error.hpp"
#include "quadrimm/io.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/transverse.hpp"

using namespace quadrimm;

TEST_CASE("emb round trip") {
  const auto g = cube().map;
  const auto text = serialize_emb(g);
  const auto rec = parse_emb(text);
  CHECK(rec.map == g);
  CHECK(rec.map.dart_count() == 24);
  CHECK(rec.map.face_count() == 6);
  CHECK(serialize_emb(rec.map) == text);
  const auto disk = quad_strip(3);
  const auto with_outer = parse_emb(serialize_emb(disk.map, disk.outer));
  REQUIRE(with_outer.outer);
  CHECK(*with_outer.outer == disk.outer);
}

TEST_CASE("emb errors carry positions") {
  try {
    parse_emb("emb 4\nsigma: 1 0 1 2\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 2, column 12") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_emb("emb 3\nsigma: 0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_emb("emb 2\nsigma: 0 x\n"), Error);
  CHECK_THROWS_AS(parse_emb("sigma: 0 1\n"), Error);
}

TEST_CASE("mgr round trip") {
  const auto m = parse_mgr("mgr 2\n0 0\n0 1\n1 1\n");
  CHECK(m.edge_count() == 3);
  CHECK(m.degree(0) == 3);
  CHECK(m.is_cubic());
  CHECK(serialize_mgr(parse_mgr(serialize_mgr(m))) == serialize_mgr(m));
  CHECK_THROWS_AS(parse_mgr("mgr 2\n0 2\n"), Error);
  CHECK(parse_mgr_records("mgr 1\n0 0\n\nmgr 2\n0 1\n").size() == 2);
}

TEST_CASE("dot export") {
  const auto dot = export_dot(cube().map);
  int nodes = 0, edges = 0;
  for (std::size_t p = 0; (p = dot.find("shape=", p)) != std::string::npos; ++p) ++nodes;
  for (std::size_t p = 0; (p = dot.find(" -- ", p)) != std::string::npos; ++p) ++edges;
  CHECK(nodes == 8);
  CHECK(edges == 12);
  CHECK(dot == export_dot(cube().map));
  const auto eps = export_dot(extract(ten_vertex_cq().map));
  edges = 0;
  for (std::size_t p = 0; (p = eps.find(" -- ", p)) != std::string::npos; ++p) ++edges;
  CHECK(edges == 12);
}

TEST_CASE("manifest json round trip") {
  RunManifest m;
  m.subcommand = "enum";
  m.parameters = {{"n", "10"}};
  m.output_codes = {"e-0001"};
  m.tool_version = "1.0.0";
  const auto back = RunManifest::from_json(m.to_json());
  CHECK(back.subcommand == "enum");
  CHECK(back.parameters.at("n") == "10");
  CHECK(back.output_codes == m.output_codes);
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
}
