#pragma once

#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// Merges the two edges at degree-2 vertex v into a single edge.
/// Throws Error(Precondition) when deg(v) != 2 or v carries a loop.
EmbeddedGraph smooth_vertex(const EmbeddedGraph& g, int v);

/// Combinatorial dual: same darts, rotation replaced by the face permutation.
EmbeddedGraph dual(const EmbeddedGraph& g);

}  // namespace quadrimm
