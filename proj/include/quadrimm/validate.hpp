#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// Two-colouring of a connected graph, or an odd closed walk proving there is none.
struct Bipartition {
  bool bipartite = false;
  std::vector<int> block_a;  // contains vertex 0
  std::vector<int> block_b;
  std::vector<int> odd_cycle;  // vertex sequence, closing edge implied
};

/// Throws Error(Precondition) naming a vertex outside the component of
/// vertex 0 when g is disconnected.
Bipartition bipartition(const EmbeddedGraph& g);

struct BlockDegreeCounts {
  int a3 = 0, a4 = 0, b3 = 0, b4 = 0;
};

struct ValidationReport {
  bool is_spherical = false;
  bool is_simple = false;
  bool is_connected = false;
  int vertices = 0, edges = 0, faces = 0;
  std::vector<int> face_lengths;  // sorted
  std::map<int, int> degree_counts;
  int nu3 = 0;
  int nu4 = 0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_blocks;
  std::optional<BlockDegreeCounts> block_degree_counts;
  std::vector<std::string> violations;

  bool passes() const { return violations.empty(); }
};

/// Checks that g is a cubic quadrangulation: connected, simple, spherical,
/// every face of length 4 and every degree 3 or 4. When the structural checks
/// pass the counting identities are verified as well; any failure is
/// recorded as a named violation.
ValidationReport validate_cq(const EmbeddedGraph& g);

/// Cut-vertex scan; true when g is connected, has at least 3 vertices and no
/// articulation point.
bool is_biconnected(const EmbeddedGraph& g);
/// Removing any two vertices leaves the graph connected.
bool is_triconnected(const EmbeddedGraph& g);

}  // namespace quadrimm
