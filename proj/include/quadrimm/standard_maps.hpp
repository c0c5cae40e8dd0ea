#pragma once

#include <utility>
#include <vector>

#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// A built map together with the vertex id of each construction index and,
/// for disks, a dart of the outer face.
struct LabeledMap {
  EmbeddedGraph map;
  std::vector<int> vertex;
  Dart outer = -1;
};

/// Straight-line plane drawing: rotations are read off by sorting neighbours
/// by angle.
LabeledMap from_plane_drawing(const std::vector<std::pair<double, double>>& points,
                              const std::vector<std::pair<int, int>>& edges);

/// The cube. Index i is the outer square for i < 4, inner square otherwise.
LabeledMap cube();

/// The ten-vertex cubic quadrangulation: hub u joined to a,b,c,d; rim cycle
/// a v1 b v2 c v3 d v4; hub w joined to v1..v4. Indices in that order:
/// u=0, a..d=1..4, v1..v4=5..8, w=9.
LabeledMap ten_vertex_cq();

LabeledMap triangle();

/// 1 x k strip of quadrangles (the grid with one row).
LabeledMap quad_strip(int k);

/// rows x cols grid of quadrangles as a disk; index r*(cols+1)+c.
LabeledMap quad_grid(int rows, int cols);

/// Disk with one interior degree-3 vertex and three spokes: centre 0, spoke
/// ends 1..3, corners 4..6 (corner 4+k between spoke ends 1+k and 1+(k+1)%3).
LabeledMap tripod_disk();

}  // namespace quadrimm
