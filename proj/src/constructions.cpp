#include "quadrimm/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "quadrimm/error.hpp"

namespace quadrimm {

namespace {

using Lists = std::vector<std::vector<int>>;

Lists neighbour_lists(const EmbeddedGraph& g) {
  Lists out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = g.neighbours(v);
  return out;
}

Dart find_dart(const EmbeddedGraph& g, int from, int to) {
  for (Dart d : g.darts_at(from))
    if (g.head_of(d) == to) return d;
  fail(ErrorKind::Structural, "no edge " + std::to_string(from) + "-" + std::to_string(to));
}

// Disk from rotation lists whose boundary, read in outer-face order, is
// `boundary` (indices into `lists`).
DiskQuadrangulation disk_from_lists(const Lists& lists, const std::vector<int>& boundary) {
  std::vector<int> id;
  DiskQuadrangulation d;
  d.map = EmbeddedGraph::from_rotation_lists(lists, &id);
  d.outer = find_dart(d.map, id[boundary[0]], id[boundary[1]]);
  return d;
}

void check_simple_lists(const Lists& lists) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    std::set<int> seen;
    for (int w : lists[v]) {
      if (w == static_cast<int>(v)) fail(ErrorKind::Structural, "loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second)
        fail(ErrorKind::Structural, "parallel edges between vertices " + std::to_string(v) + " and " + std::to_string(w));
    }
  }
}

// Neighbours of a boundary vertex strictly between `next` and `prev` going
// counterclockwise, i.e. the ones on the disk side.
std::vector<int> inner_fan(const std::vector<int>& rot, int next, int prev) {
  const auto it = std::find(rot.begin(), rot.end(), next);
  if (it == rot.end()) fail(ErrorKind::Structural, "boundary neighbour missing from rotation");
  std::vector<int> out;
  const std::size_t k = static_cast<std::size_t>(it - rot.begin());
  for (std::size_t s = 1; s < rot.size(); ++s) {
    const int w = rot[(k + s) % rot.size()];
    if (w == prev) return out;
    out.push_back(w);
  }
  fail(ErrorKind::Structural, "boundary neighbour missing from rotation");
}

int count_closed(const EmbeddedGraph& g) {
  int closed = 0;
  for (const auto& w : maximal_transverse_walks(g)) closed += w.kind == WalkKind::Closed ? 1 : 0;
  return closed;
}

}  // namespace

TwoDisksResult two_disks(const DiskQuadrangulation& d_in, const DiskQuadrangulation& d2_in, BoundaryBijection phi,
                         bool auto_fix) {
  TwoDisksResult out;
  DiskQuadrangulation d = d_in, d2 = d2_in;
  if (d.boundary().size() != d2.boundary().size())
    fail(ErrorKind::Precondition, "boundary lengths differ: " + std::to_string(d.boundary().size()) + " and " +
                                      std::to_string(d2.boundary().size()));

  if (auto_fix && validate_disk(d).b2 == 0 && validate_disk(d2).b2 == 0) {
    try {
      d = unbuffer(d);
      out.notes.push_back("first disk unbuffered");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Precondition) throw;
      d2 = unbuffer(d2);
      out.notes.push_back("second disk unbuffered");
    }
  }

  const auto b = d.boundary();
  auto b2 = d2.boundary();
  const int n = static_cast<int>(b.size());
  Lists l1 = neighbour_lists(d.map);
  Lists l2 = neighbour_lists(d2.map);
  if (!phi.reversed) {
    // Mirror the second disk so the gluing reverses orientation.
    for (auto& r : l2) std::reverse(r.begin(), r.end());
    std::vector<int> flipped(n);
    for (int k = 0; k < n; ++k) flipped[k] = b2[(n - k) % n];
    b2 = flipped;
    phi = {-phi.offset, true};
  }

  for (int i = 0; i < n; ++i)
    if (d.map.degree(b[i]) == 2 && d2.map.degree(b2[phi.image(i, n)]) == 2)
      fail(ErrorKind::Precondition, "boundary position " + std::to_string(i) + " pairs two degree-2 vertices");

  const int n1 = d.map.vertex_count();
  std::vector<int> to_result(d2.map.vertex_count(), -1);
  std::vector<int> position2(d2.map.vertex_count(), -1);
  for (int k = 0; k < n; ++k) position2[b2[k]] = k;
  for (int i = 0; i < n; ++i) to_result[b2[phi.image(i, n)]] = b[i];
  int next = n1;
  for (int w = 0; w < d2.map.vertex_count(); ++w)
    if (to_result[w] < 0) to_result[w] = next++;

  Lists result(next);
  for (int v = 0; v < n1; ++v) result[v] = l1[v];
  for (int w = 0; w < d2.map.vertex_count(); ++w) {
    if (position2[w] >= 0) continue;
    for (int x : l2[w]) result[to_result[w]].push_back(to_result[x]);
  }
  for (int i = 0; i < n; ++i) {
    const int j = phi.image(i, n);
    const int w = b2[j];
    const int before = b2[(j + n - 1) % n], after = b2[(j + 1) % n];
    auto& r = result[b[i]];
    r.clear();
    r.push_back(to_result[before]);
    for (int x : inner_fan(l1[b[i]], b[(i + 1) % n], b[(i + n - 1) % n])) r.push_back(x);
    r.push_back(to_result[after]);
    for (int x : inner_fan(l2[w], after, before)) r.push_back(to_result[x]);
  }
  check_simple_lists(result);

  std::vector<int> id;
  out.map = EmbeddedGraph::from_rotation_lists(result, &id);
  for (int i = 0; i < n; ++i) out.seam.push_back(id[b[i]]);

  const int closed = count_closed(out.map);
  if (closed > 0) {
    if (auto_fix) {
      out.map = reduce(out.map, &out.notes);
      out.seam.clear();
      out.notes.push_back("reduced " + std::to_string(closed) + " closed transversal(s)");
    } else {
      out.notes.push_back("warning: result contains " + std::to_string(closed) + " closed transversal(s)");
    }
  }
  return out;
}

DiskSplit split_along_cycle(const EmbeddedGraph& g, const TransverseCycle& c) {
  const int m = static_cast<int>(c.darts.size());
  if (m < 4 || static_cast<int>(c.vertices.size()) != m) fail(ErrorKind::Precondition, "cycle has fewer than 4 vertices");
  std::vector<int> at(g.vertex_count(), -1);
  for (int k = 0; k < m; ++k) {
    const Dart d = c.darts[k];
    if (d < 0 || d >= g.dart_count() || g.vertex_of(d) != c.vertices[k])
      fail(ErrorKind::Precondition, "cycle dart " + std::to_string(k) + " does not leave its vertex");
    if (g.head_of(d) != c.vertices[(k + 1) % m])
      fail(ErrorKind::Precondition, "cycle dart " + std::to_string(k) + " does not reach the next vertex");
    if (at[c.vertices[k]] >= 0) fail(ErrorKind::Precondition, "cycle repeats vertex " + std::to_string(c.vertices[k]));
    at[c.vertices[k]] = k;
  }

  // Sector heads at each cycle vertex: left runs counterclockwise from the
  // outgoing dart to the incoming one.
  std::vector<std::vector<int>> left_fan(m), right_fan(m);
  for (int k = 0; k < m; ++k) {
    const Dart out = c.darts[k];
    const Dart in = EmbeddedGraph::pair(c.darts[(k + m - 1) % m]);
    for (Dart x = g.rotate(out); x != in; x = g.rotate(x)) left_fan[k].push_back(g.head_of(x));
    for (Dart x = g.rotate(in); x != out; x = g.rotate(x)) right_fan[k].push_back(g.head_of(x));
  }

  std::vector<int> side(g.vertex_count(), -1);
  auto flood = [&](const std::vector<std::vector<int>>& fans, int label) {
    std::vector<int> stack;
    for (const auto& fan : fans)
      for (int w : fan)
        if (at[w] < 0) stack.push_back(w);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (side[v] == label) continue;
      if (side[v] >= 0) fail(ErrorKind::Precondition, "cycle does not separate vertex " + std::to_string(v));
      side[v] = label;
      for (int w : g.neighbours(v))
        if (at[w] < 0 && side[w] != label) stack.push_back(w);
    }
  };
  flood(left_fan, 0);
  flood(right_fan, 1);

  auto make = [&](int label) {
    std::vector<int> local(g.vertex_count(), -1);
    int count = 0;
    for (int k = 0; k < m; ++k) local[c.vertices[k]] = count++;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (side[v] == label) local[v] = count++;
    Lists lists(count);
    for (int k = 0; k < m; ++k) {
      const int prev = c.vertices[(k + m - 1) % m], nxt = c.vertices[(k + 1) % m];
      auto& r = lists[k];
      r.push_back(local[label == 0 ? nxt : prev]);
      for (int w : label == 0 ? left_fan[k] : right_fan[k]) r.push_back(local[w]);
      r.push_back(local[label == 0 ? prev : nxt]);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (side[v] != label) continue;
      for (int w : g.neighbours(v)) lists[local[v]].push_back(local[w]);
    }
    std::vector<int> boundary(m);
    for (int k = 0; k < m; ++k) boundary[k] = label == 0 ? k : (m - k) % m;
    return disk_from_lists(lists, boundary);
  };

  DiskSplit s{make(0), make(1), {0, true}};
  for (const auto* part : {&s.left, &s.right}) {
    const auto report = validate_disk(*part);
    if (!report.valid)
      fail(ErrorKind::Precondition, "cutting along the cycle leaves an invalid disk: " +
                                        (report.violations.empty() ? std::string("unknown") : report.violations.front()));
  }
  return s;
}

EmbeddedGraph spiral(const SpiralInput& in) {
  const auto& disk = in.disk;
  const auto report = validate_disk(disk);
  if (!report.valid) fail(ErrorKind::Precondition, "spiral needs a valid disk");
  const auto bd = disk.boundary();
  const int n = static_cast<int>(bd.size());
  if (n < 6 || n % 2 != 0) fail(ErrorKind::Precondition, "spiral needs an even boundary of length at least 6");
  if (in.l < 1) fail(ErrorKind::Precondition, "spiral needs l >= 1");
  const int s = ((in.label_start % n) + n) % n;

  Lists adj = neighbour_lists(disk.map);
  std::vector<int> label(n);
  for (int k = 0; k < n; ++k) label[k] = bd[(s + k) % n];
  if (adj[label[0]].size() != 3) fail(ErrorKind::Precondition, "label 0 must have degree 3");
  if (adj[label[n - 1]].size() != 2) fail(ErrorKind::Precondition, "last label must have degree 2");

  std::vector<int> cyc = label;  // current boundary, outer-face order
  auto pos = [&](int v) {
    const auto it = std::find(cyc.begin(), cyc.end(), v);
    if (it == cyc.end()) fail(ErrorKind::Structural, "spiral: vertex left the boundary early");
    return static_cast<int>(it - cyc.begin());
  };
  auto insert_before = [&](int v, int at, int w) {
    auto& r = adj[v];
    r.insert(std::find(r.begin(), r.end(), at), w);
  };
  auto insert_after = [&](int v, int at, int w) {
    auto& r = adj[v];
    r.insert(std::find(r.begin(), r.end(), at) + 1, w);
  };
  const auto size = [&] { return static_cast<int>(cyc.size()); };

  // Step I: a new quadrangle over each of the first l labels.
  for (int i = 0; i < in.l; ++i) {
    const int a = label[n + i - 1], x = label[i], b = label[i + 1];
    const int p = pos(x);
    if (cyc[(p + size() - 1) % size()] != a || cyc[(p + 1) % size()] != b)
      fail(ErrorKind::Structural, "spiral: labels out of boundary order");
    const int w = static_cast<int>(adj.size());
    adj.push_back({a, b});
    insert_before(a, x, w);
    insert_after(b, x, w);
    cyc[p] = w;
    label.push_back(w);
  }
  if (in.l < n / 2)
    for (int k : {in.l + 1, in.l + n / 2, in.l + n / 2 + 1})
      if (adj[label[k]].size() != 3)
        fail(ErrorKind::Precondition, "label " + std::to_string(k) + " must have degree 3 for l=" + std::to_string(in.l));

  // Step II: chords closing the boundary two edges at a time.
  for (int j = 0; j <= n / 2 - 3; ++j) {
    const int a = label[in.l + n - 1 - j], b = label[in.l + 2 + j];
    const int p = pos(a);
    const int x = cyc[(p + 1) % size()], y = cyc[(p + 2) % size()];
    if (cyc[(p + 3) % size()] != b) fail(ErrorKind::Structural, "spiral: chord ends are not three apart");
    insert_before(a, x, b);
    insert_after(b, y, a);
    cyc.erase(std::remove_if(cyc.begin(), cyc.end(), [&](int v) { return v == x || v == y; }), cyc.end());
  }
  check_simple_lists(adj);
  return EmbeddedGraph::from_rotation_lists(adj);
}

char turn_letter(Turn t) { return t == Turn::Right ? 'R' : t == Turn::Straight ? 'S' : 'L'; }

TurnOptions classify_turn(const EmbeddedGraph& g, Dart entering) {
  const int f = g.face_of(entering);
  if (g.face(f).size() != 4)
    fail(ErrorKind::Precondition, "face " + std::to_string(f) + " has length " + std::to_string(g.face(f).size()));
  const Dart r = g.face_next(entering);
  const Dart s = g.face_next(r);
  return {r, s, g.face_next(s)};
}

CablingWalk parse_walk(const std::string& text) {
  CablingWalk w;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto bad = [&] {
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad walk token '" + tok + "'");
      };
      if (tok.size() < 3 || tok[0] != 'e') bad();
      const char t = tok.back();
      const std::string digits = tok.substr(1, tok.size() - 2);
      if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) bad();
      w.edges.push_back(std::stoi(digits));
      if (t == 'R') w.turns.push_back(Turn::Right);
      else if (t == 'S') w.turns.push_back(Turn::Straight);
      else if (t == 'L') w.turns.push_back(Turn::Left);
      else bad();
    }
  }
  return w;
}

std::string format_walk(const CablingWalk& w) {
  std::string out;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (i) out += ' ';
    out += 'e' + std::to_string(w.edges[i]) + turn_letter(w.turns[i]);
  }
  return out;
}

ResolvedWalk resolve_walk(const EmbeddedGraph& g, const CablingWalk& w) {
  const int n = static_cast<int>(w.edges.size());
  if (n < 2 || static_cast<int>(w.turns.size()) != n) fail(ErrorKind::Precondition, "walk needs at least two steps");
  for (int e : w.edges)
    if (e < 0 || e >= g.edge_count()) fail(ErrorKind::Precondition, "walk edge " + std::to_string(e) + " out of range");
  std::set<int> distinct(w.edges.begin(), w.edges.end());
  if (static_cast<int>(distinct.size()) != n) fail(ErrorKind::Precondition, "walk crosses an edge twice");

  ResolvedWalk r;
  std::string why;
  for (Dart start : {2 * w.edges[0], 2 * w.edges[0] + 1}) {
    std::vector<Dart> entering;
    Dart cur = start;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      entering.push_back(cur);
      const Dart next = classify_turn(g, cur).pick(w.turns[i]);
      if (EmbeddedGraph::edge_of(next) != w.edges[(i + 1) % n]) {
        ok = false;
        why = "step " + std::to_string(i) + " does not reach edge " + std::to_string(w.edges[(i + 1) % n]);
      }
      cur = EmbeddedGraph::pair(next);
    }
    if (ok && cur != start) {
      ok = false;
      why = "walk does not close up";
    }
    if (ok) {
      r.entering = entering;
      break;
    }
  }
  if (r.entering.empty()) fail(ErrorKind::Precondition, why);

  std::vector<int> turning;
  for (int i = 0; i < n; ++i)
    if (w.turns[i] != Turn::Straight) turning.push_back(i);
  if (turning.size() < 2 || turning.size() % 2 != 0) fail(ErrorKind::Precondition, "walk needs an even, positive number of turns");
  for (std::size_t k = 0; k < turning.size(); ++k)
    if (w.turns[turning[k]] == w.turns[turning[(k + 1) % turning.size()]])
      fail(ErrorKind::Precondition, "turns at steps " + std::to_string(turning[k]) + " and " +
                                        std::to_string(turning[(k + 1) % turning.size()]) + " do not alternate");

  std::map<int, std::vector<int>> visits;
  for (int i = 0; i < n; ++i) visits[g.face_of(r.entering[i])].push_back(i);
  for (const auto& [f, steps] : visits) {
    if (steps.size() > 2) fail(ErrorKind::Precondition, "walk visits face " + std::to_string(f) + " more than twice");
    if (steps.size() == 2)
      for (int i : steps)
        if (w.turns[i] == Turn::Straight)
          fail(ErrorKind::Precondition, "walk passes face " + std::to_string(f) + " twice without turning at step " +
                                            std::to_string(i));
  }

  for (int i = 0; i < n; ++i) {
    if (w.turns[i] == Turn::Right) {
      r.right.push_back(i);
      for (int k = (i + 1) % n; w.turns[k] != Turn::Left; k = (k + 1) % n) r.between.push_back(k);
    } else if (w.turns[i] == Turn::Left) {
      r.left.push_back(i);
    }
  }
  std::sort(r.between.begin(), r.between.end());
  return r;
}

CablingWalk walk_from_turns(const EmbeddedGraph& g, Dart entering, const std::vector<Turn>& turns) {
  CablingWalk w;
  Dart cur = entering;
  for (Turn t : turns) {
    w.edges.push_back(EmbeddedGraph::edge_of(cur));
    w.turns.push_back(t);
    cur = EmbeddedGraph::pair(classify_turn(g, cur).pick(t));
  }
  return w;
}

EmbeddedGraph cable(const EmbeddedGraph& g, const CablingWalk& w, int c) {
  if (c < 0) fail(ErrorKind::Precondition, "cable needs c >= 0");
  const auto r = resolve_walk(g, w);
  if (c == 0) return g;
  const int n = static_cast<int>(w.edges.size());
  std::vector<char> in_r(n, 0), in_l(n, 0), in_i(n, 0);
  for (int i : r.right) in_r[i] = 1;
  for (int i : r.left) in_l[i] = 1;
  for (int i : r.between) in_i[i] = 1;

  // Positions along edge i run from 0 (tail of the entering dart) to
  // m_i + 1; inc[i][p] leaves position p towards p + 1.
  MapBuilder b(g);
  std::vector<int> m(n);
  std::vector<std::vector<Dart>> inc(n);
  for (int i = 0; i < n; ++i) {
    m[i] = in_i[i] || in_l[i] ? c - 1 : c;
    Dart cur = r.entering[i];
    for (int k = 0; k < m[i]; ++k) cur = b.rotate(b.subdivide(cur));
  }
  for (int i = 0; i < n; ++i) {
    inc[i].push_back(r.entering[i]);
    for (int k = 0; k < m[i]; ++k) inc[i].push_back(b.rotate(b.pair(inc[i].back())));
  }

  for (int i = 0; i < n; ++i) {
    const int nx = (i + 1) % n;
    const int shift = in_r[i] || in_i[i] ? 1 : 0;
    for (int j = 1; j <= c; ++j) {
      const int t = j - shift;
      const Dart x = b.face_next(inc[i][j - 1]);
      const Dart y = t >= 1 ? b.pair(inc[nx][t - 1]) : b.face_next(b.pair(inc[nx][0]));
      b.add_chord(x, y);
    }
  }

  for (int i = 0; i < n; ++i)
    if (in_i[i] || in_l[i])
      for (Dart d : inc[i]) b.remove_edge(d);
  for (Dart d = 0; d < b.dart_capacity(); ++d)
    if (b.alive(d) && b.degree(d) == 2 && !b.smooth(d))
      fail(ErrorKind::Structural, "cable: smoothing met a loop");
  return b.build();
}

}  // namespace quadrimm
