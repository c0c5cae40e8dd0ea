#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace quadrimm {

using Dart = int;

/// Cellular embedding stored as a combinatorial map.
///
/// Darts are dense integers 0..2E-1. The edge involution is fixed: dart 2k
/// pairs with 2k+1 (edge k). `rotation` maps each dart to the next dart
/// counterclockwise around its vertex. Faces are the orbits of
/// phi = rotation o edge_pairing.
///
/// Vertices are numbered by increasing smallest dart; the dart lists of a
/// vertex and of a face both start at their smallest dart. Values are
/// immutable once built.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  /// Throws Error(Structural) unless `rotation` is a permutation of an even
  /// number of darts.
  explicit EmbeddedGraph(std::vector<Dart> rotation);

  /// Builds from per-vertex counterclockwise neighbour lists of a simple graph.
  /// When `vertex_ids` is given it receives the built vertex id of each list index.
  static EmbeddedGraph from_rotation_lists(const std::vector<std::vector<int>>& neighbours,
                                           std::vector<int>* vertex_ids = nullptr);

  int dart_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }
  int face_count() const { return static_cast<int>(face_darts_.size()); }

  static constexpr Dart pair(Dart d) { return d ^ 1; }
  static constexpr int edge_of(Dart d) { return d >> 1; }
  Dart rotate(Dart d) const { return rotation_[d]; }
  Dart rotate_back(Dart d) const { return rotation_inv_[d]; }
  /// Next dart along the boundary walk of d's face.
  Dart face_next(Dart d) const { return rotation_[pair(d)]; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int head_of(Dart d) const { return vertex_of_[pair(d)]; }
  int face_of(Dart d) const { return face_of_[d]; }
  int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }

  std::span<const Dart> darts_at(int v) const { return vertex_darts_[v]; }
  std::span<const Dart> face(int f) const { return face_darts_[f]; }
  const std::vector<std::vector<Dart>>& faces() const { return face_darts_; }
  const std::vector<Dart>& rotation() const { return rotation_; }

  /// |V| - |E| + |F|, summed over components.
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
  bool is_connected() const;
  /// Connected and of Euler characteristic 2.
  bool is_spherical() const { return is_connected() && euler_characteristic() == 2; }
  bool has_loop() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loop() && !has_parallel_edges(); }

  /// Same map with every rotation inverted (orientation reversal).
  EmbeddedGraph mirror() const;
  /// Relabels darts by the bijection `perm` (perm[old] = new); edge pairing must
  /// be respected, i.e. perm maps each pair {2k,2k+1} onto some {2j,2j+1}.
  EmbeddedGraph relabel(std::span<const Dart> perm) const;

  /// Vertex sequence of a face.
  std::vector<int> face_vertices(int f) const;
  /// Neighbour vertex ids of v in rotation order.
  std::vector<int> neighbours(int v) const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    return a.rotation_ == b.rotation_;
  }

 private:
  std::vector<Dart> rotation_;
  std::vector<Dart> rotation_inv_;
  std::vector<int> vertex_of_;
  std::vector<int> face_of_;
  std::vector<std::vector<Dart>> vertex_darts_;
  std::vector<std::vector<Dart>> face_darts_;
};

/// Mutable dart map with an explicit edge involution, used while a
/// construction is in progress. `build()` renumbers live darts into the
/// canonical 2k/2k+1 layout of EmbeddedGraph.
class MapBuilder {
 public:
  MapBuilder() = default;
  explicit MapBuilder(const EmbeddedGraph& g);

  int dart_capacity() const { return static_cast<int>(pair_.size()); }
  bool alive(Dart d) const { return alive_[d] != 0; }
  Dart pair(Dart d) const { return pair_[d]; }
  Dart rotate(Dart d) const { return rotation_[d]; }
  Dart rotate_back(Dart d) const { return rotation_inv_[d]; }
  Dart face_next(Dart d) const { return rotation_[pair_[d]]; }
  int degree(Dart d) const;
  std::vector<Dart> face_darts(Dart d) const;
  std::vector<Dart> vertex_darts(Dart d) const;
  bool same_vertex(Dart a, Dart b) const;

  /// New edge whose two darts each form their own degree-1 vertex.
  Dart new_edge();
  /// Moves isolated dart `d` into the rotation of `pos`, just before `pos`.
  void insert_before(Dart pos, Dart d);
  void insert_after(Dart pos, Dart d);
  /// Takes d out of its rotation, leaving it as an isolated vertex.
  void detach(Dart d);
  void remove_edge(Dart d);
  /// Splits the edge of d with a new degree-2 vertex. Returns the new dart at
  /// the new vertex that pairs with d.
  Dart subdivide(Dart d);
  /// Adds an edge inside the common face of x and y, from the vertex of x to
  /// the vertex of y. Returns the new dart at x's vertex.
  Dart add_chord(Dart x, Dart y);
  /// Smooths the degree-2 vertex of `a`. Returns false (and changes nothing)
  /// when the two darts of the vertex form a loop.
  bool smooth(Dart a);

  EmbeddedGraph build() const;
  /// Builds one graph per connected component, ordered by smallest live dart.
  std::vector<EmbeddedGraph> build_components() const;
  /// Position of each live dart in the numbering used by build(); -1 if dead.
  std::vector<Dart> build_numbering() const;

 private:
  std::vector<Dart> pair_;
  std::vector<Dart> rotation_;
  std::vector<Dart> rotation_inv_;
  std::vector<char> alive_;
};

}  // namespace quadrimm
