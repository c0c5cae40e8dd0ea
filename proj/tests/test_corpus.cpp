#include <atomic>
#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "quadrimm/census.hpp"
#include "quadrimm/config.hpp"
#include "quadrimm/corpus.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/radial.hpp"
#include "quadrimm/standard_maps.hpp"

using namespace quadrimm;

TEST_CASE("corpus rejects duplicates and non-quadrangulations") {
  Corpus c;
  CHECK(c.add(cube().map, "cube"));
  CHECK_FALSE(c.add(cube().map, "again"));
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(c.add(triangle().map, "bad"), Error);
}

TEST_CASE("corpus save and load") {
  Corpus c;
  c.add(cube().map, "cube");
  c.add(ten_vertex_cq().map, "ten");
  c.add(radial(cube().map), "radial of cube");
  const auto dir = std::filesystem::temp_directory_path() / "quadrimm_corpus_test";
  std::filesystem::remove_all(dir);
  c.save(dir);
  CHECK(std::filesystem::exists(dir / "index.tsv"));
  const auto back = Corpus::load(dir);
  REQUIRE(back.size() == c.size());
  for (const auto& [code, e] : c.entries()) {
    REQUIRE(back.entries().count(code) == 1);
    CHECK(back.entries().at(code).provenance == e.provenance);
    CHECK(back.entries().at(code).extraction == e.extraction);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("coverage of a tiny corpus") {
  const auto classes = all_cubic_classes_8();
  CHECK(classes.size() == 140);
  Corpus c;
  c.add(cube().map, "cube");
  auto r = coverage_report(c, classes);
  CHECK(r.classes == 140);
  CHECK(r.achieved() == 1);
  CHECK(r.missing.size() == 139);
  // The radial of the cube extracts to two disjoint K4s.
  c.add(radial(cube().map), "radial");
  r = coverage_report(c, classes);
  CHECK(r.achieved() == 2);
}

TEST_CASE("config parsing") {
  const auto c = parse_config("# limits\nenum_max_n = 20\nworkers=3\n\nnode_budget = 1000 # inline\n");
  CHECK(c.enum_max_n == 20);
  CHECK(c.workers == 3);
  CHECK(c.node_budget == 1000);
  CHECK(c.oracle_max_n == 12);
  CHECK_THROWS_AS(parse_config("colour = blue\n"), Error);
  CHECK_THROWS_AS(parse_config("workers = many\n"), Error);
  CHECK_THROWS_AS(parse_config("workers\n"), Error);
}

TEST_CASE("worker override from the environment") {
  setenv("QUADRIMM_WORKERS", "5", 1);
  CHECK(default_config().workers == 5);
  CHECK(parse_config("workers = 2\n").workers == 5);
  unsetenv("QUADRIMM_WORKERS");
  CHECK(parse_config("workers = 2\n").workers == 2);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(100, 4, [&](int i) { ++hits[i]; });
  for (const auto& h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](int i) {
                    if (i == 7) fail(ErrorKind::Precondition, "seven");
                  }),
                  Error);
}
