#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadrimm/embedded_graph.hpp"
#include "quadrimm/multigraph.hpp"

namespace quadrimm {

enum class WalkKind { CompletePath, Closed };

struct TransverseWalk {
  std::vector<Dart> darts;  // each dart departs the vertex the walk is at
  WalkKind kind = WalkKind::CompletePath;
  /// Degree-3 end vertices of a complete path; (-1, -1) for closed walks.
  std::pair<int, int> endpoints{-1, -1};

  /// Vertices visited in order; a closed walk does not repeat its start.
  std::vector<int> vertices(const EmbeddedGraph& g) const;
};

/// Continuation across the degree-4 vertex that d arrives at.
/// Throws Error(Precondition) if that vertex does not have degree 4.
Dart straight_exit(const EmbeddedGraph& g, Dart d);

/// Partition of the edges into complete transverse paths (listed first, by
/// smaller endpoint) and closed transversals (from their smallest dart).
/// Throws Error(Precondition) on a degree outside {3,4}.
std::vector<TransverseWalk> maximal_transverse_walks(const EmbeddedGraph& g);

/// Cubic multigraph on the degree-3 vertices (in increasing vertex order),
/// one edge per complete transverse path.
Multigraph extract(const EmbeddedGraph& g);

/// Deletes every closed transversal and smooths the vertices left with
/// degree 2. Components that collapse to a free loop are dropped and noted.
EmbeddedGraph reduce(const EmbeddedGraph& g, std::vector<std::string>* notes = nullptr);

struct TransverseCycle {
  std::vector<int> vertices;
  std::vector<Dart> darts;  // darts[i] leaves vertices[i]
};

/// A simple cycle made of complete transverse paths, shortest first, if any.
std::optional<TransverseCycle> has_complete_transverse_cycle(const EmbeddedGraph& g);

}  // namespace quadrimm
