#pragma once

#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// Radial graph: the vertices and faces of g, one edge per corner. Radial
/// edge k joins the tail of dart k of g to the face holding the corner
/// between dart k and the next dart counterclockwise; dart 2k sits at the
/// original vertex.
EmbeddedGraph radial(const EmbeddedGraph& g);

}  // namespace quadrimm
