#include "hole_filler.hpp"

#include <algorithm>
#include <optional>

#include "quadrimm/error.hpp"

namespace quadrimm::detail {

std::vector<int> FillState::hole_membership() const {
  std::vector<int> count(adj.size(), 0);
  for (const auto& h : holes)
    for (int v : h) ++count[v];
  return count;
}

EmbeddedGraph FillState::build(std::vector<int>* vertex_ids) const {
  return EmbeddedGraph::from_rotation_lists(adj, vertex_ids);
}

namespace {

constexpr int kNew = -1;

bool adjacent(const FillState& s, int a, int b) {
  return std::find(s.adj[a].begin(), s.adj[a].end(), b) != s.adj[a].end();
}

// Places the quadrangle x, y, p, q across hole edge (x, y) = (hole[i], hole[i+1]).
// rp, rq are positions relative to y, or kNew.
std::optional<FillState> place(const FillState& s, int h, int i, int rp, int rq, const FillOptions& opt) {
  const auto& H = s.holes[h];
  const int L = static_cast<int>(H.size());
  auto at = [&](int rel) { return H[(i + 1 + rel) % L]; };
  const int extra = (rp == kNew) + (rq == kNew);
  if (s.vertex_count() + extra > opt.max_vertices) return std::nullopt;

  FillState t = s;
  const int x = at(L - 1), y = at(0);
  auto add_vertex = [&]() {
    t.adj.emplace_back();
    t.min_deg.push_back(static_cast<std::int8_t>(opt.new_min_deg));
    t.max_deg.push_back(static_cast<std::int8_t>(opt.new_max_deg));
    return t.vertex_count() - 1;
  };
  const int p = rp == kNew ? add_vertex() : at(rp);
  const int q = rq == kNew ? add_vertex() : at(rq);

  const bool has_yp = rp == 1;
  const bool has_pq = rp != kNew && rq != kNew && rq == rp + 1;
  const bool has_xq = rq == L - 2;
  if (rp != kNew && !has_yp && adjacent(s, y, p)) return std::nullopt;
  if (rq != kNew && !has_xq && adjacent(s, x, q)) return std::nullopt;
  if (rp != kNew && rq != kNew && !has_pq && adjacent(s, p, q)) return std::nullopt;

  const int face[4] = {x, y, p, q};
  const int rel[4] = {L - 1, 0, rp, rq};
  for (int k = 0; k < 4; ++k) {
    const int v = face[k], next = face[(k + 1) % 4], prev = face[(k + 3) % 4];
    if (rel[k] == kNew) {
      t.adj[v] = {next, prev};
      continue;
    }
    const int after = at((rel[k] + 1) % L), before = at((rel[k] + L - 1) % L);
    auto& list = t.adj[v];
    auto pos = std::find(list.begin(), list.end(), after);
    std::vector<int> ins;
    if (next != after) ins.push_back(next);
    if (prev != before) ins.push_back(prev);
    list.insert(pos + 1, ins.begin(), ins.end());
    if (t.degree(v) > t.max_deg[v]) return std::nullopt;
  }

  auto seg = [&](int a, int b) {
    std::vector<int> out;
    for (int r = a; r <= b; ++r) out.push_back(at(r));
    return out;
  };
  std::vector<std::vector<int>> parts;
  if (rp != kNew && rq != kNew) {
    parts = {seg(0, rp), seg(rp, rq), seg(rq, L - 1)};
  } else if (rp == kNew && rq != kNew) {
    parts = {seg(0, rq), seg(rq, L - 1)};
    parts[0].push_back(p);
  } else if (rp != kNew) {
    parts = {seg(0, rp), seg(rp, L - 1)};
    parts[1].push_back(q);
  } else {
    parts = {seg(0, L - 1)};
    parts[0].push_back(q);
    parts[0].push_back(p);
  }
  t.holes.erase(t.holes.begin() + h);
  int slot = h;
  for (auto& part : parts)
    if (part.size() > 2) t.holes.insert(t.holes.begin() + slot++, std::move(part));
  return t;
}

class Filler {
 public:
  explicit Filler(const FillOptions& opt) : opt_(opt) {}

  void search(const FillState& s) {
    if (++nodes_ > opt_.node_budget && opt_.node_budget > 0)
      fail(ErrorKind::Budget, "search exceeded its budget of " + std::to_string(opt_.node_budget) + " nodes");
    const auto member = s.hole_membership();
    for (int v = 0; v < s.vertex_count(); ++v)
      if (member[v] == 0 && s.degree(v) < s.min_deg[v]) return;
    if (s.holes.empty()) {
      opt_.emit(s);
      return;
    }
    int best_h = -1, best_m = -1, best_cap = 1 << 20, best_len = 1 << 20;
    for (int h = 0; h < static_cast<int>(s.holes.size()); ++h) {
      const auto& H = s.holes[h];
      const int L = static_cast<int>(H.size());
      int total = 0;
      for (int m = 0; m < L; ++m) {
        const int cap = s.max_deg[H[m]] - s.degree(H[m]);
        total += cap;
        if (cap < best_cap || (cap == best_cap && L < best_len)) {
          best_cap = cap;
          best_len = L;
          best_h = h;
          best_m = m;
        }
      }
      if (total < L - 4) return;
    }
    if (opt_.prune && opt_.prune(s, member)) return;

    const int L = static_cast<int>(s.holes[best_h].size());
    const int i = (best_m + L - 1) % L;
    auto go = [&](int rp, int rq) {
      if (auto t = place(s, best_h, i, rp, rq, opt_)) search(*t);
    };
    for (int rp = 1; rp <= L - 3; rp += 2) {
      for (int rq = rp + 1; rq <= L - 2; rq += 2) go(rp, rq);
      go(rp, kNew);
    }
    for (int rq = 2; rq <= L - 2; rq += 2) go(kNew, rq);
    go(kNew, kNew);
  }

  long long nodes() const { return nodes_; }

 private:
  const FillOptions& opt_;
  long long nodes_ = 0;
};

}  // namespace

long long fill_holes(const FillState& start, const FillOptions& options) {
  Filler f(options);
  f.search(start);
  return f.nodes();
}

}  // namespace quadrimm::detail
