#include "quadrimm/transverse.hpp"

#include <algorithm>
#include <functional>

#include "quadrimm/error.hpp"

namespace quadrimm {

std::vector<int> TransverseWalk::vertices(const EmbeddedGraph& g) const {
  std::vector<int> out;
  for (Dart d : darts) out.push_back(g.vertex_of(d));
  if (kind == WalkKind::CompletePath && !darts.empty()) out.push_back(g.head_of(darts.back()));
  return out;
}

Dart straight_exit(const EmbeddedGraph& g, Dart d) {
  const Dart back = EmbeddedGraph::pair(d);
  const int v = g.vertex_of(back);
  if (g.degree(v) != 4)
    fail(ErrorKind::Precondition, "not a crossing: vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  return g.rotate(g.rotate(back));
}

namespace {

void check_degrees(const EmbeddedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3 && g.degree(v) != 4)
      fail(ErrorKind::Precondition, "unsupported degree " + std::to_string(g.degree(v)) + " at vertex " + std::to_string(v));
}

std::vector<Dart> reversed_darts(const std::vector<Dart>& darts) {
  std::vector<Dart> out;
  for (auto it = darts.rbegin(); it != darts.rend(); ++it) out.push_back(EmbeddedGraph::pair(*it));
  return out;
}

}  // namespace

std::vector<TransverseWalk> maximal_transverse_walks(const EmbeddedGraph& g) {
  check_degrees(g);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<TransverseWalk> paths, closed;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) continue;
    for (Dart start : g.darts_at(v)) {
      if (used[EmbeddedGraph::edge_of(start)]) continue;
      TransverseWalk w;
      Dart d = start;
      while (true) {
        used[EmbeddedGraph::edge_of(d)] = 1;
        w.darts.push_back(d);
        if (g.degree(g.head_of(d)) == 3) break;
        d = straight_exit(g, d);
      }
      int a = v, b = g.head_of(d);
      if (a == b && reversed_darts(w.darts).front() < w.darts.front()) w.darts = reversed_darts(w.darts);
      w.endpoints = {a, b};
      paths.push_back(std::move(w));
    }
  }
  for (Dart s = 0; s < g.dart_count(); ++s) {
    if (used[EmbeddedGraph::edge_of(s)]) continue;
    TransverseWalk w;
    w.kind = WalkKind::Closed;
    Dart d = s;
    do {
      used[EmbeddedGraph::edge_of(d)] = 1;
      w.darts.push_back(d);
      d = straight_exit(g, d);
    } while (d != s);
    closed.push_back(std::move(w));
  }
  paths.insert(paths.end(), closed.begin(), closed.end());
  return paths;
}

Multigraph extract(const EmbeddedGraph& g) {
  const auto walks = maximal_transverse_walks(g);
  std::vector<int> index(g.vertex_count(), -1);
  int n = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 3) index[v] = n++;
  Multigraph m(n);
  for (const auto& w : walks)
    if (w.kind == WalkKind::CompletePath) m.add_edge(index[w.endpoints.first], index[w.endpoints.second]);
  return m;
}

EmbeddedGraph reduce(const EmbeddedGraph& g, std::vector<std::string>* notes) {
  const auto walks = maximal_transverse_walks(g);
  MapBuilder b(g);
  std::vector<char> touched(g.dart_count(), 0);
  bool any = false;
  for (const auto& w : walks) {
    if (w.kind != WalkKind::Closed) continue;
    any = true;
    for (Dart d : w.darts) {
      b.remove_edge(d);
      touched[d] = touched[EmbeddedGraph::pair(d)] = 1;
    }
  }
  if (!any) return g;
  // Surviving darts at vertices that lost edges.
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (!b.alive(d) || (!touched[g.rotate(d)] && !touched[g.rotate_back(d)])) continue;
    if (b.degree(d) != 2) continue;
    if (!b.smooth(d)) {
      if (notes) notes->push_back("dropped a component that reduced to a free loop");
      b.remove_edge(d);
    }
  }
  return b.build();
}

std::optional<TransverseCycle> has_complete_transverse_cycle(const EmbeddedGraph& g) {
  const auto walks = maximal_transverse_walks(g);
  struct Piece {
    int a, b;
    std::vector<Dart> darts;
    std::vector<int> inner;
  };
  std::vector<Piece> pieces;
  for (const auto& w : walks) {
    if (w.kind != WalkKind::CompletePath) continue;
    auto vs = w.vertices(g);
    std::vector<int> inner(vs.begin() + 1, vs.end() - 1);
    auto sorted = inner;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;  // self-crossing
    pieces.push_back({w.endpoints.first, w.endpoints.second, w.darts, inner});
  }
  std::vector<char> taken(g.vertex_count(), 0), piece_used(pieces.size(), 0);
  TransverseCycle cur;
  int start = -1;

  std::function<bool(int, int)> extend = [&](int at, int remaining) -> bool {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (piece_used[i]) continue;
      const auto& p = pieces[i];
      if (p.a != at && p.b != at) continue;
      const bool forward = p.a == at;
      const int other = forward ? p.b : p.a;
      if (other < start) continue;
      const bool closes = other == start;
      if (closes != (remaining == 1)) continue;
      if (!closes && taken[other]) continue;
      if (std::any_of(p.inner.begin(), p.inner.end(), [&](int v) { return taken[v]; })) continue;
      // A loop piece counts only when it is the whole cycle.
      std::vector<Dart> darts = forward ? p.darts : reversed_darts(p.darts);
      std::vector<int> inner = p.inner;
      if (!forward) std::reverse(inner.begin(), inner.end());
      const auto mark = [&](char value) {
        for (int v : inner) taken[v] = value;
        if (!closes) taken[other] = value;
      };
      mark(1);
      piece_used[i] = 1;
      const std::size_t size = cur.vertices.size();
      for (std::size_t k = 0; k < darts.size(); ++k) {
        cur.darts.push_back(darts[k]);
        cur.vertices.push_back(g.vertex_of(darts[k]));
      }
      if (closes || extend(other, remaining - 1)) return true;
      cur.darts.resize(size);
      cur.vertices.resize(size);
      piece_used[i] = 0;
      mark(0);
    }
    return false;
  };

  for (int length = 1; length <= static_cast<int>(pieces.size()); ++length) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) continue;
      start = v;
      taken[v] = 1;
      if (extend(v, length)) return cur;
      taken[v] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace quadrimm
