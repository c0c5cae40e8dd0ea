#include "quadrimm/map_ops.hpp"

#include <string>

#include "quadrimm/error.hpp"

namespace quadrimm {

EmbeddedGraph smooth_vertex(const EmbeddedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::Precondition, "no vertex " + std::to_string(v));
  if (g.degree(v) != 2)
    fail(ErrorKind::Precondition, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", not 2");
  MapBuilder b(g);
  if (!b.smooth(g.darts_at(v)[0]))
    fail(ErrorKind::Precondition, "vertex " + std::to_string(v) + " carries a loop; smoothing would leave a free loop");
  return b.build();
}

EmbeddedGraph dual(const EmbeddedGraph& g) {
  std::vector<Dart> phi(g.dart_count());
  for (Dart d = 0; d < g.dart_count(); ++d) phi[d] = g.face_next(d);
  return EmbeddedGraph(std::move(phi));
}

}  // namespace quadrimm
