#include "quadrimm/disk.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hole_filler.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/transverse.hpp"

namespace quadrimm {

std::vector<Dart> DiskQuadrangulation::boundary_darts() const {
  std::vector<Dart> out;
  Dart d = outer;
  do {
    out.push_back(d);
    d = map.face_next(d);
  } while (d != outer);
  return out;
}

std::vector<int> DiskQuadrangulation::boundary() const {
  std::vector<int> out;
  for (Dart d : boundary_darts()) out.push_back(map.vertex_of(d));
  return out;
}

std::vector<char> DiskQuadrangulation::boundary_mask() const {
  std::vector<char> mask(map.vertex_count(), 0);
  for (int v : boundary()) mask[v] = 1;
  return mask;
}

CanonicalCode DiskQuadrangulation::code() const { return canon_embedded_marked_face(map, outer_face()); }

DiskReport validate_disk(const DiskQuadrangulation& d) {
  DiskReport r;
  auto& bad = r.violations;
  const auto& g = d.map;
  if (d.outer < 0 || d.outer >= g.dart_count()) {
    bad.push_back("outer dart out of range");
    return r;
  }
  if (!g.is_connected()) bad.push_back("not connected");
  else if (g.euler_characteristic() != 2) bad.push_back("not a disk: Euler characteristic " + std::to_string(g.euler_characteristic()));
  const auto bd = d.boundary();
  r.boundary_length = static_cast<int>(bd.size());
  auto sorted = bd;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad.push_back("outer boundary is not a simple cycle");
  const auto mask = d.boundary_mask();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int k = g.degree(v);
    if (mask[v]) {
      if (k == 2) ++r.b2;
      else if (k == 3) ++r.b3;
      else bad.push_back("boundary vertex " + std::to_string(v) + " has degree " + std::to_string(k));
    } else {
      if (k == 3) ++r.i3;
      else if (k == 4) ++r.i4;
      else bad.push_back("interior vertex " + std::to_string(v) + " has degree " + std::to_string(k));
    }
  }
  for (int f = 0; f < g.face_count(); ++f)
    if (f != d.outer_face() && g.face(f).size() != 4) {
      bad.push_back("inner face " + std::to_string(f) + " has length " + std::to_string(g.face(f).size()));
      break;
    }
  if (bad.empty() && r.b2 + r.i3 != 4) bad.push_back("b2 + i3 = " + std::to_string(r.b2 + r.i3) + ", expected 4");
  switch (r.b2) {
    case 2: r.shape = "digon"; break;
    case 3: r.shape = "triangle"; break;
    case 4: r.shape = "square"; break;
    default: r.shape = "b2=" + std::to_string(r.b2);
  }
  r.valid = bad.empty();
  return r;
}

DiskQuadrangulation buffer(const DiskQuadrangulation& d) {
  const auto outer = d.boundary_darts();
  const int n = static_cast<int>(outer.size());
  MapBuilder b(d.map);
  std::vector<Dart> spoke(n);
  for (int i = 0; i < n; ++i) {
    spoke[i] = b.new_edge();
    b.insert_before(outer[i], spoke[i]);
  }
  Dart first_ring = -1;
  for (int i = 0; i < n; ++i) {
    const Dart x = b.pair(spoke[i]);
    const Dart y = b.face_next(spoke[(i + 1) % n]);
    const Dart ring = b.add_chord(x, y);
    if (i == 0) first_ring = ring;
  }
  const auto id = b.build_numbering();
  return {b.build(), id[first_ring]};
}

DiskQuadrangulation unbuffer(const DiskQuadrangulation& d) {
  const auto& g = d.map;
  const auto outer = d.boundary_darts();
  const int n = static_cast<int>(outer.size());
  const auto mask = d.boundary_mask();
  std::vector<Dart> spoke(n);
  std::vector<int> inner(n);
  for (int i = 0; i < n; ++i) {
    const int v = g.vertex_of(outer[i]);
    if (g.degree(v) != 3) fail(ErrorKind::Precondition, "not a buffering: boundary vertex " + std::to_string(v) + " does not have degree 3");
    // The spoke sits between the two boundary darts at v.
    spoke[i] = g.rotate(outer[i]);
    inner[i] = g.head_of(spoke[i]);
    if (mask[inner[i]]) fail(ErrorKind::Precondition, "not a buffering: boundary vertex " + std::to_string(v) + " has a chord");
  }
  std::set<int> distinct(inner.begin(), inner.end());
  for (int i = 0; i < n; ++i) {
    const Dart in_quad = g.face_next(g.face_next(EmbeddedGraph::pair(outer[i])));
    if (g.vertex_of(in_quad) != inner[i] || g.head_of(in_quad) != inner[(i + 1) % n] ||
        g.face(g.face_of(in_quad)).size() != 4)
      fail(ErrorKind::Precondition, "not a buffering: ring quadrangle fails at boundary vertex " + std::to_string(g.vertex_of(outer[i])));
  }
  if (static_cast<int>(distinct.size()) != n)
    fail(ErrorKind::Precondition, "not a buffering: spokes meet at inner vertex " + std::to_string(inner[0]));
  MapBuilder b(g);
  for (int i = 0; i < n; ++i) {
    b.remove_edge(outer[i]);
    b.remove_edge(spoke[i]);
  }
  const Dart keep = g.face_next(g.face_next(EmbeddedGraph::pair(outer[0])));
  const auto id = b.build_numbering();
  DiskQuadrangulation out{b.build(), id[keep]};
  return out;
}

namespace {

struct DiskWalk {
  std::vector<Dart> darts;
  bool closed = false;
  bool boundary_to_boundary = false;
};

// Transverse walks of a disk: they continue only through interior degree-4
// vertices. Boundary edges are left out.
std::vector<DiskWalk> disk_walks(const DiskQuadrangulation& d) {
  const auto& g = d.map;
  const auto mask = d.boundary_mask();
  const int outer_face = d.outer_face();
  std::vector<char> used(g.edge_count(), 0);
  for (Dart o : d.boundary_darts()) used[EmbeddedGraph::edge_of(o)] = 1;
  auto crossing = [&](int v) { return !mask[v] && g.degree(v) == 4; };
  std::vector<DiskWalk> out;
  for (Dart s = 0; s < g.dart_count(); ++s) {
    if (used[EmbeddedGraph::edge_of(s)] || crossing(g.vertex_of(s))) continue;
    DiskWalk w;
    Dart x = s;
    while (true) {
      used[EmbeddedGraph::edge_of(x)] = 1;
      w.darts.push_back(x);
      if (!crossing(g.head_of(x))) break;
      x = straight_exit(g, x);
    }
    w.boundary_to_boundary = mask[g.vertex_of(s)] && mask[g.head_of(x)];
    out.push_back(std::move(w));
  }
  for (Dart s = 0; s < g.dart_count(); ++s) {
    if (used[EmbeddedGraph::edge_of(s)]) continue;
    DiskWalk w;
    w.closed = true;
    Dart x = s;
    do {
      used[EmbeddedGraph::edge_of(x)] = 1;
      w.darts.push_back(x);
      x = straight_exit(g, x);
    } while (x != s);
    out.push_back(std::move(w));
  }
  (void)outer_face;
  return out;
}

}  // namespace

bool is_irreducible_disk(const DiskQuadrangulation& d) {
  for (const auto& w : disk_walks(d))
    if (w.closed || w.boundary_to_boundary) return false;
  return true;
}

DiskQuadrangulation reduce_disk(const DiskQuadrangulation& start) {
  DiskQuadrangulation d = start;
  while (true) {
    const auto walks = disk_walks(d);
    const auto& g = d.map;
    MapBuilder b(g);
    bool any = false;
    for (const auto& w : walks) {
      if (!w.closed && !w.boundary_to_boundary) continue;
      any = true;
      for (Dart x : w.darts) b.remove_edge(x);
    }
    if (!any) return d;
    for (Dart x = 0; x < g.dart_count(); ++x) {
      if (!b.alive(x) || g.degree(g.vertex_of(x)) <= 2 || b.degree(x) != 2) continue;
      if (!b.smooth(x)) fail(ErrorKind::Precondition, "disk reduction left a free loop");
    }
    Dart outer = -1;
    for (Dart o : d.boundary_darts())
      if (b.alive(o)) {
        outer = o;
        break;
      }
    if (outer < 0) fail(ErrorKind::Precondition, "disk reduction consumed the whole boundary");
    const auto id = b.build_numbering();
    DiskQuadrangulation next{b.build(), id[outer]};
    if (!next.map.is_connected() || next.boundary().size() < 4)
      fail(ErrorKind::Precondition, "disk degenerates below a single quadrangle during reduction");
    d = std::move(next);
  }
}

// ---------------------------------------------------------------------------

namespace {

// Branch test for irreducible enumeration: a boundary-to-boundary transverse
// path or a closed transversal among completed vertices never goes away.
bool reducible_so_far(const detail::FillState& s, const std::vector<int>& member, int boundary) {
  auto is_boundary = [&](int v) { return v < boundary; };
  int corners_and_centres = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (member[v] != 0) continue;
    if (is_boundary(v) ? s.degree(v) == 2 : s.degree(v) == 3) ++corners_and_centres;
  }
  if (corners_and_centres > 4) return true;
  auto full_crossing = [&](int v) { return !is_boundary(v) && s.degree(v) == 4; };
  auto opposite = [&](int at, int from) {
    const auto& list = s.adj[at];
    const int k = static_cast<int>(std::find(list.begin(), list.end(), from) - list.begin());
    return list[(k + 2) % 4];
  };
  const int limit = 4 * s.vertex_count() + 4;
  for (int v = 0; v < boundary; ++v) {
    for (int w : s.adj[v]) {
      if (w == (v + 1) % boundary || w == (v + boundary - 1) % boundary) continue;
      int prev = v, at = w;
      for (int steps = 0; steps < limit; ++steps) {
        if (is_boundary(at)) return true;
        if (!full_crossing(at)) break;
        const int next = opposite(at, prev);
        prev = at;
        at = next;
      }
    }
  }
  for (int v = boundary; v < s.vertex_count(); ++v) {
    if (!full_crossing(v)) continue;
    for (int w : s.adj[v]) {
      int prev = v, at = w;
      for (int steps = 0; steps < limit; ++steps) {
        if (!full_crossing(at)) break;
        const int next = opposite(at, prev);
        if (at == v && next == w) return true;
        prev = at;
        at = next;
      }
    }
  }
  return false;
}

}  // namespace

DiskEnumeration enumerate_disks(int max_boundary, int max_vertices, bool irreducible_only, long long node_budget) {
  if (max_boundary < 4 || max_boundary % 2 != 0)
    fail(ErrorKind::Precondition, "max_boundary must be even and at least 4");
  DiskEnumeration out;
  for (int n = 4; n <= max_boundary && n <= max_vertices; n += 2) {
    detail::FillState start;
    start.adj.resize(n);
    for (int v = 0; v < n; ++v) start.adj[v] = {(v + 1) % n, (v + n - 1) % n};
    start.min_deg.assign(n, 2);
    start.max_deg.assign(n, 3);
    start.holes.emplace_back();
    for (int v = 0; v < n; ++v) start.holes[0].push_back(v);
    std::map<CanonicalCode, DiskQuadrangulation> found;
    detail::FillOptions opt;
    opt.max_vertices = max_vertices;
    opt.node_budget = node_budget == 0 ? 0 : std::max<long long>(1, node_budget - out.nodes);
    if (irreducible_only)
      opt.prune = [n](const detail::FillState& s, const std::vector<int>& member) { return reducible_so_far(s, member, n); };
    opt.emit = [&](const detail::FillState& s) {
      std::vector<int> vid;
      auto g = s.build(&vid);
      Dart outer = -1;
      for (Dart d : g.darts_at(vid[0]))
        if (g.head_of(d) == vid[1]) outer = d;
      DiskQuadrangulation disk{std::move(g), outer};
      if (!validate_disk(disk).valid) fail(ErrorKind::Structural, "disk enumerator produced an invalid disk");
      if (irreducible_only && !is_irreducible_disk(disk)) return;
      found.try_emplace(disk.code(), std::move(disk));
    };
    out.nodes += detail::fill_holes(start, opt);
    for (auto& [code, disk] : found) out.disks.push_back(std::move(disk));
  }
  return out;
}

ClassificationReport classify_irreducible(int max_boundary, int max_vertices, long long node_budget) {
  const auto all = enumerate_disks(max_boundary, max_vertices, true, node_budget);
  ClassificationReport r;
  r.enumerated = static_cast<int>(all.disks.size());
  std::set<CanonicalCode> base;
  std::vector<const DiskQuadrangulation*> rest;
  for (const auto& d : all.disks) {
    const auto rep = validate_disk(d);
    if (!rep.valid) {
      r.counterexamples.push_back(d);
      continue;
    }
    if (rep.b2 >= 1) {
      base.insert(d.code());
      r.base.push_back(d.code());
    } else {
      rest.push_back(&d);
    }
  }
  for (const auto* d : rest) {
    bool ok = false;
    try {
      const auto inner = unbuffer(*d);
      ok = validate_disk(inner).valid && base.count(inner.code()) && buffer(inner).code() == d->code();
    } catch (const Error&) {
      ok = false;
    }
    if (ok) r.buffered.push_back(d->code());
    else r.counterexamples.push_back(*d);
  }
  return r;
}

}  // namespace quadrimm
