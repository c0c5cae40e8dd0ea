#include "quadrimm/embedded_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "quadrimm/error.hpp"

namespace quadrimm {

EmbeddedGraph::EmbeddedGraph(std::vector<Dart> rotation) : rotation_(std::move(rotation)) {
  const int n = dart_count();
  if (n % 2 != 0) fail(ErrorKind::Structural, "odd number of darts: " + std::to_string(n));
  rotation_inv_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    const Dart t = rotation_[d];
    if (t < 0 || t >= n) fail(ErrorKind::Structural, "rotation image out of range at dart " + std::to_string(d));
    if (rotation_inv_[t] != -1) fail(ErrorKind::Structural, "rotation is not a permutation: dart " + std::to_string(t) + " hit twice");
    rotation_inv_[t] = d;
  }

  vertex_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (vertex_of_[d] != -1) continue;
    const int v = static_cast<int>(vertex_darts_.size());
    auto& orbit = vertex_darts_.emplace_back();
    Dart x = d;
    do {
      vertex_of_[x] = v;
      orbit.push_back(x);
      x = rotation_[x];
    } while (x != d);
  }

  face_of_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (face_of_[d] != -1) continue;
    const int f = static_cast<int>(face_darts_.size());
    auto& orbit = face_darts_.emplace_back();
    Dart x = d;
    do {
      face_of_[x] = f;
      orbit.push_back(x);
      x = face_next(x);
    } while (x != d);
  }
}

EmbeddedGraph EmbeddedGraph::from_rotation_lists(const std::vector<std::vector<int>>& neighbours,
                                                 std::vector<int>* vertex_ids) {
  const int nv = static_cast<int>(neighbours.size());
  std::map<std::pair<int, int>, Dart> dart_of;
  Dart next = 0;
  for (int v = 0; v < nv; ++v) {
    std::set<int> seen;
    for (int w : neighbours[v]) {
      if (w < 0 || w >= nv || w == v) fail(ErrorKind::Structural, "bad neighbour " + std::to_string(w) + " of vertex " + std::to_string(v));
      if (!seen.insert(w).second) fail(ErrorKind::Structural, "repeated neighbour in rotation list of " + std::to_string(v));
      if (v < w) {
        dart_of[{v, w}] = next++;
        dart_of[{w, v}] = next++;
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    for (int w : neighbours[v])
      if (std::find(neighbours[w].begin(), neighbours[w].end(), v) == neighbours[w].end())
        fail(ErrorKind::Structural, "asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(w));
  std::vector<Dart> rot(next, -1);
  for (int v = 0; v < nv; ++v) {
    const auto& list = neighbours[v];
    for (std::size_t i = 0; i < list.size(); ++i)
      rot[dart_of.at({v, list[i]})] = dart_of.at({v, list[(i + 1) % list.size()]});
  }
  EmbeddedGraph g(std::move(rot));
  if (vertex_ids) {
    vertex_ids->assign(nv, -1);
    for (int v = 0; v < nv; ++v)
      if (!neighbours[v].empty()) (*vertex_ids)[v] = g.vertex_of(dart_of.at({v, neighbours[v][0]}));
  }
  return g;
}

bool EmbeddedGraph::is_connected() const {
  if (vertex_count() <= 1) return vertex_count() == 1;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Dart d : vertex_darts_[v]) {
      const int w = head_of(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

bool EmbeddedGraph::has_loop() const {
  for (Dart d = 0; d < dart_count(); d += 2)
    if (vertex_of(d) == vertex_of(d + 1)) return true;
  return false;
}

bool EmbeddedGraph::has_parallel_edges() const {
  std::set<std::pair<int, int>> seen;
  for (Dart d = 0; d < dart_count(); d += 2) {
    const int a = vertex_of(d), b = vertex_of(d + 1);
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second) return true;
  }
  return false;
}

EmbeddedGraph EmbeddedGraph::mirror() const { return EmbeddedGraph(rotation_inv_); }

EmbeddedGraph EmbeddedGraph::relabel(std::span<const Dart> perm) const {
  const int n = dart_count();
  if (static_cast<int>(perm.size()) != n) fail(ErrorKind::Structural, "relabel: permutation size mismatch");
  for (Dart d = 0; d < n; d += 2)
    if ((perm[d] ^ 1) != perm[d + 1]) fail(ErrorKind::Structural, "relabel: permutation does not respect edge pairing");
  std::vector<Dart> rot(n, -1);
  for (Dart d = 0; d < n; ++d) rot[perm[d]] = perm[rotation_[d]];
  return EmbeddedGraph(std::move(rot));
}

std::vector<int> EmbeddedGraph::face_vertices(int f) const {
  std::vector<int> out;
  for (Dart d : face_darts_[f]) out.push_back(vertex_of(d));
  return out;
}

std::vector<int> EmbeddedGraph::neighbours(int v) const {
  std::vector<int> out;
  for (Dart d : vertex_darts_[v]) out.push_back(head_of(d));
  return out;
}

// ---------------------------------------------------------------------------

MapBuilder::MapBuilder(const EmbeddedGraph& g) {
  const int n = g.dart_count();
  pair_.resize(n);
  rotation_ = g.rotation();
  rotation_inv_.resize(n);
  alive_.assign(n, 1);
  for (Dart d = 0; d < n; ++d) {
    pair_[d] = EmbeddedGraph::pair(d);
    rotation_inv_[d] = g.rotate_back(d);
  }
}

int MapBuilder::degree(Dart d) const {
  int k = 0;
  Dart x = d;
  do {
    ++k;
    x = rotation_[x];
  } while (x != d);
  return k;
}

std::vector<Dart> MapBuilder::face_darts(Dart d) const {
  std::vector<Dart> out;
  Dart x = d;
  do {
    out.push_back(x);
    x = face_next(x);
  } while (x != d);
  return out;
}

std::vector<Dart> MapBuilder::vertex_darts(Dart d) const {
  std::vector<Dart> out;
  Dart x = d;
  do {
    out.push_back(x);
    x = rotation_[x];
  } while (x != d);
  return out;
}

bool MapBuilder::same_vertex(Dart a, Dart b) const {
  Dart x = a;
  do {
    if (x == b) return true;
    x = rotation_[x];
  } while (x != a);
  return false;
}

Dart MapBuilder::new_edge() {
  const Dart d = dart_capacity();
  pair_.push_back(d + 1);
  pair_.push_back(d);
  rotation_.push_back(d);
  rotation_.push_back(d + 1);
  rotation_inv_.push_back(d);
  rotation_inv_.push_back(d + 1);
  alive_.push_back(1);
  alive_.push_back(1);
  return d;
}

void MapBuilder::insert_before(Dart pos, Dart d) { insert_after(rotation_inv_[pos], d); }

void MapBuilder::insert_after(Dart pos, Dart d) {
  if (rotation_[d] != d) fail(ErrorKind::Structural, "insert of a dart that is not isolated");
  const Dart next = rotation_[pos];
  rotation_[pos] = d;
  rotation_inv_[d] = pos;
  rotation_[d] = next;
  rotation_inv_[next] = d;
}

void MapBuilder::detach(Dart d) {
  const Dart prev = rotation_inv_[d];
  const Dart next = rotation_[d];
  if (prev == d) return;
  rotation_[prev] = next;
  rotation_inv_[next] = prev;
  rotation_[d] = d;
  rotation_inv_[d] = d;
}

void MapBuilder::remove_edge(Dart d) {
  const Dart e = pair_[d];
  detach(d);
  detach(e);
  alive_[d] = 0;
  alive_[e] = 0;
}

Dart MapBuilder::subdivide(Dart d) {
  const Dart e = pair_[d];
  const Dart p = new_edge();
  const Dart q = p + 1;
  pair_[d] = p;
  pair_[p] = d;
  pair_[q] = e;
  pair_[e] = q;
  rotation_[p] = q;
  rotation_[q] = p;
  rotation_inv_[p] = q;
  rotation_inv_[q] = p;
  return p;
}

Dart MapBuilder::add_chord(Dart x, Dart y) {
  const Dart n1 = new_edge();
  const Dart n2 = n1 + 1;
  insert_before(x, n1);
  insert_before(y, n2);
  return n1;
}

bool MapBuilder::smooth(Dart a) {
  const Dart b = rotation_[a];
  if (rotation_[b] != a || b == a) fail(ErrorKind::Precondition, "smooth: vertex does not have degree 2");
  const Dart pa = pair_[a];
  const Dart pb = pair_[b];
  if (pa == b) return false;
  pair_[pa] = pb;
  pair_[pb] = pa;
  alive_[a] = 0;
  alive_[b] = 0;
  rotation_[a] = a;
  rotation_[b] = b;
  rotation_inv_[a] = a;
  rotation_inv_[b] = b;
  return true;
}

std::vector<Dart> MapBuilder::build_numbering() const {
  const int n = dart_capacity();
  std::vector<Dart> id(n, -1);
  Dart next = 0;
  for (Dart d = 0; d < n; ++d) {
    if (!alive_[d] || id[d] != -1) continue;
    id[d] = next++;
    id[pair_[d]] = next++;
  }
  return id;
}

EmbeddedGraph MapBuilder::build() const {
  const auto id = build_numbering();
  int count = 0;
  for (Dart d = 0; d < dart_capacity(); ++d) count += alive_[d] ? 1 : 0;
  std::vector<Dart> rot(count);
  for (Dart d = 0; d < dart_capacity(); ++d)
    if (alive_[d]) rot[id[d]] = id[rotation_[d]];
  return EmbeddedGraph(std::move(rot));
}

std::vector<EmbeddedGraph> MapBuilder::build_components() const {
  const int n = dart_capacity();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (Dart s = 0; s < n; ++s) {
    if (!alive_[s] || comp[s] != -1) continue;
    std::vector<Dart> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      for (Dart t : {pair_[d], rotation_[d]}) {
        if (comp[t] == -1) {
          comp[t] = ncomp;
          stack.push_back(t);
        }
      }
    }
    ++ncomp;
  }
  std::vector<EmbeddedGraph> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Dart> id(n, -1);
    Dart next = 0;
    for (Dart d = 0; d < n; ++d) {
      if (comp[d] != c || id[d] != -1) continue;
      id[d] = next++;
      id[pair_[d]] = next++;
    }
    std::vector<Dart> rot(next);
    for (Dart d = 0; d < n; ++d)
      if (comp[d] == c) rot[id[d]] = id[rotation_[d]];
    out.emplace_back(std::move(rot));
  }
  return out;
}

}  // namespace quadrimm
