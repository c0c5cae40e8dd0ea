#include "doctest.h"
#include "quadrimm/disk.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/standard_maps.hpp"

using namespace quadrimm;

namespace {

DiskQuadrangulation as_disk(const LabeledMap& m) { return {m.map, m.outer}; }

}  // namespace

TEST_CASE("shapes of small disks") {
  const auto quad = validate_disk(as_disk(quad_grid(1, 1)));
  CHECK(quad.valid);
  CHECK(quad.b2 == 4);
  CHECK(quad.shape == "square");

  const auto tripod = validate_disk(as_disk(tripod_disk()));
  CHECK(tripod.valid);
  CHECK(tripod.boundary_length == 6);
  CHECK(tripod.b2 == 3);
  CHECK(tripod.i3 == 1);
  CHECK(tripod.shape == "triangle");

  CHECK(validate_disk(as_disk(quad_grid(2, 3))).valid);
}

TEST_CASE("boundary follows the outer face") {
  const auto d = as_disk(quad_grid(1, 2));
  const auto b = d.boundary();
  const auto darts = d.boundary_darts();
  REQUIRE(b.size() == 6);
  REQUIRE(darts.size() == 6);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(d.map.vertex_of(darts[i]) == b[i]);
    CHECK(d.map.face_of(darts[i]) == d.outer_face());
  }
}

TEST_CASE("buffer and unbuffer are inverse") {
  for (const auto& d : {as_disk(quad_grid(1, 1)), as_disk(tripod_disk()), as_disk(quad_grid(1, 3))}) {
    const auto b = buffer(d);
    const auto r = validate_disk(b);
    CHECK(r.valid);
    CHECK(r.b2 == 0);
    CHECK(r.boundary_length == static_cast<int>(d.boundary().size()));
    CHECK(unbuffer(b).code() == d.code());
  }
  CHECK_THROWS_AS(unbuffer(as_disk(quad_grid(1, 1))), Error);
}

TEST_CASE("reduction of grids") {
  const auto quad = as_disk(quad_grid(1, 1)).code();
  CHECK(is_irreducible_disk(as_disk(quad_grid(1, 1))));
  CHECK_FALSE(is_irreducible_disk(as_disk(quad_grid(1, 4))));
  CHECK(reduce_disk(as_disk(quad_grid(1, 4))).code() == quad);
  CHECK(reduce_disk(as_disk(quad_grid(2, 2))).code() == quad);
  CHECK(is_irreducible_disk(as_disk(tripod_disk())));
}

TEST_CASE("irreducible search matches filtering every disk") {
  const auto all = enumerate_disks(10, 16, false);
  std::vector<CanonicalCode> filtered;
  for (const auto& d : all.disks) {
    CHECK(validate_disk(d).valid);
    if (is_irreducible_disk(d)) filtered.push_back(d.code());
  }
  std::vector<CanonicalCode> pruned;
  for (const auto& d : enumerate_disks(10, 16, true).disks) pruned.push_back(d.code());
  std::sort(filtered.begin(), filtered.end());
  std::sort(pruned.begin(), pruned.end());
  CHECK(filtered == pruned);
}

TEST_CASE("classification splits into base disks and bufferings") {
  const auto rep = classify_irreducible(8, 20);
  CHECK(rep.counterexamples.empty());
  CHECK(static_cast<int>(rep.base.size() + rep.buffered.size()) == rep.enumerated);
  CHECK_FALSE(rep.base.empty());
  CHECK_FALSE(rep.buffered.empty());
}
