#include "quadrimm/radial.hpp"

namespace quadrimm {

EmbeddedGraph radial(const EmbeddedGraph& g) {
  const int n = g.dart_count();
  std::vector<Dart> rot(2 * n);
  for (Dart x = 0; x < n; ++x) {
    rot[2 * x] = 2 * g.rotate(x);
    // Around a face vertex the corners come in the reverse of the face walk.
    rot[2 * x + 1] = 2 * g.rotate_back(EmbeddedGraph::pair(x)) + 1;
  }
  return EmbeddedGraph(std::move(rot));
}

}  // namespace quadrimm
