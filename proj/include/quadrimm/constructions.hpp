#pragma once

#include <string>
#include <vector>

#include "quadrimm/disk.hpp"
#include "quadrimm/embedded_graph.hpp"
#include "quadrimm/transverse.hpp"

namespace quadrimm {

/// Cyclic correspondence between the boundaries of two disks, both read in
/// outer-face order from their outer darts: vertex i of the first goes to
/// vertex (offset + i) of the second, or (offset - i) when reversed.
struct BoundaryBijection {
  int offset = 0;
  bool reversed = true;

  int image(int i, int n) const {
    const int k = reversed ? offset - i : offset + i;
    return ((k % n) + n) % n;
  }
};

struct TwoDisksResult {
  EmbeddedGraph map;
  std::vector<int> seam;  // glued boundary, in the first disk's boundary order
  std::vector<std::string> notes;
};

/// Glues d to d2 along phi, deleting the boundary edges of d. With auto_fix a
/// pair of boundaries without degree-2 vertices is resolved by unbuffering one
/// side, and closed transversals of the result are reduced away; otherwise
/// they are only noted. Throws Error(Precondition) when two degree-2 vertices
/// are paired or the boundary lengths differ, Error(Structural) when the
/// result is not simple.
TwoDisksResult two_disks(const DiskQuadrangulation& d, const DiskQuadrangulation& d2, BoundaryBijection phi,
                         bool auto_fix = false);

struct DiskSplit {
  DiskQuadrangulation left;   // region to the left of the cycle
  DiskQuadrangulation right;
  BoundaryBijection phi;      // two_disks(left, right, phi) rebuilds the graph
};

/// Cuts g along a cycle of complete transverse paths. Throws
/// Error(Precondition) when c is not a simple cycle of g whose vertices split
/// as the two disks require.
DiskSplit split_along_cycle(const EmbeddedGraph& g, const TransverseCycle& c);

struct SpiralInput {
  DiskQuadrangulation disk;
  int label_start = 0;  // boundary position of label 0
  int l = 1;
};

/// Spiral construction. Labels run along the boundary in outer-face order
/// from label_start. Throws Error(Precondition) on an illegal labeling or l.
EmbeddedGraph spiral(const SpiralInput& in);

enum class Turn { Right, Straight, Left };

char turn_letter(Turn t);

/// Next darts of the walk after crossing into the face of `entering`:
/// the three other edges of that quadrangle in face order are right,
/// straight and left. Each returned dart lies in that face.
struct TurnOptions {
  Dart right, straight, left;
  Dart pick(Turn t) const { return t == Turn::Right ? right : t == Turn::Straight ? straight : left; }
};
TurnOptions classify_turn(const EmbeddedGraph& g, Dart entering);

/// Closed walk in the dual, as the crossed edges with the turn taken after
/// each crossing.
struct CablingWalk {
  std::vector<int> edges;
  std::vector<Turn> turns;
};

/// Parses `e3R e7S e9L ...` (whitespace separated, '#' comments).
CablingWalk parse_walk(const std::string& text);
std::string format_walk(const CablingWalk& w);

struct ResolvedWalk {
  std::vector<Dart> entering;  // entering[i] lies in the face reached after edge i
  std::vector<int> right, left, between;  // I_R, I_L, I (0-based positions)
  int period() const { return static_cast<int>(right.size() + between.size()); }
};

/// Checks that w is a cabling walk of g. Throws Error(Precondition) with the
/// failing position otherwise.
ResolvedWalk resolve_walk(const EmbeddedGraph& g, const CablingWalk& w);

/// Builds the walk taken from `entering` by following `turns`.
CablingWalk walk_from_turns(const EmbeddedGraph& g, Dart entering, const std::vector<Turn>& turns);

EmbeddedGraph cable(const EmbeddedGraph& g, const CablingWalk& w, int c);

}  // namespace quadrimm
