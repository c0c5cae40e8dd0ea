#pragma once

#include <string>
#include <vector>

#include "quadrimm/canon.hpp"
#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// Quadrangulated disk: a spherical map with a distinguished outer face,
/// given by one of its darts.
struct DiskQuadrangulation {
  EmbeddedGraph map;
  Dart outer = 0;

  int outer_face() const { return map.face_of(outer); }
  /// Boundary vertices in outer-face order, starting at the tail of `outer`.
  std::vector<int> boundary() const;
  /// Outer-face darts in order, starting at `outer`.
  std::vector<Dart> boundary_darts() const;
  std::vector<char> boundary_mask() const;
  CanonicalCode code() const;
};

struct DiskReport {
  bool valid = false;
  int boundary_length = 0;
  int b2 = 0, b3 = 0, i3 = 0, i4 = 0;
  std::string shape;  // "digon", "triangle", "square" by b2, else "b2=<k>"
  std::vector<std::string> violations;
};

DiskReport validate_disk(const DiskQuadrangulation& d);

/// Surrounds the disk with a ring of quadrangles.
DiskQuadrangulation buffer(const DiskQuadrangulation& d);
/// Removes the outer ring. Throws Error(Precondition) naming the vertex where
/// the ring structure fails.
DiskQuadrangulation unbuffer(const DiskQuadrangulation& d);

/// True when the disk has neither a closed transversal nor a transverse path
/// with both ends on the boundary (boundary edges themselves excluded).
bool is_irreducible_disk(const DiskQuadrangulation& d);
/// Deletes such walks (all at once, repeatedly) and smooths every vertex
/// whose degree the deletion brought down to 2. Throws Error(Precondition)
/// if the disk degenerates.
DiskQuadrangulation reduce_disk(const DiskQuadrangulation& d);

struct DiskEnumeration {
  std::vector<DiskQuadrangulation> disks;  // ordered by boundary length, then code
  long long nodes = 0;
};

/// All valid simple disks with even boundary length 4..max_boundary and at
/// most max_vertices vertices, one per class of disks with marked outer face.
/// Throws Error(Budget) past node_budget search nodes (0 = unlimited).
DiskEnumeration enumerate_disks(int max_boundary, int max_vertices, bool irreducible_only, long long node_budget = 0);

struct ClassificationReport {
  std::vector<CanonicalCode> base;      // irreducible, b2 >= 1
  std::vector<CanonicalCode> buffered;  // irreducible, b2 = 0, unbuffers into base
  std::vector<DiskQuadrangulation> counterexamples;
  int enumerated = 0;
};

/// Splits the irreducible disks within bounds into the base set and
/// bufferings of base members.
ClassificationReport classify_irreducible(int max_boundary, int max_vertices, long long node_budget = 0);

}  // namespace quadrimm
