#include "quadrimm/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "quadrimm/error.hpp"

namespace quadrimm {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 + words.size() * 4);
  out += kind == CodeKind::Embedded ? 'e' : kind == CodeKind::Disk ? 'd' : 'm';
  out += '-';
  for (auto w : words)
    for (int shift = 12; shift >= 0; shift -= 4) out += digits[(w >> shift) & 0xf];
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
  if (text.size() < 2 || text[1] != '-' || (text.size() - 2) % 4 != 0)
    fail(ErrorKind::Parse, "malformed canonical code: " + text);
  CanonicalCode c;
  switch (text[0]) {
    case 'e': c.kind = CodeKind::Embedded; break;
    case 'd': c.kind = CodeKind::Disk; break;
    case 'm': c.kind = CodeKind::Multigraph; break;
    default: fail(ErrorKind::Parse, "unknown canonical code kind in: " + text);
  }
  for (std::size_t i = 2; i < text.size(); i += 4) {
    unsigned value = 0;
    for (std::size_t j = i; j < i + 4; ++j) {
      const char ch = text[j];
      int digit = ch >= '0' && ch <= '9' ? ch - '0' : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10 : -1;
      if (digit < 0) fail(ErrorKind::Parse, "bad hex digit in canonical code: " + text);
      value = value * 16 + static_cast<unsigned>(digit);
    }
    c.words.push_back(static_cast<std::uint16_t>(value));
  }
  return c;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(c.kind);
  for (auto w : c.words) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

// Breadth-first relabeling trace from one start dart. Writes the trace into
// `out` and returns false as soon as the trace exceeds `best` (when given).
class DartTracer {
 public:
  explicit DartTracer(const EmbeddedGraph& g) : g_(g), label_(g.dart_count()), order_(g.dart_count()) {}

  // Returns -1 if the trace is smaller than best, 0 if equal, 1 if larger
  // (aborted early). With best empty, always returns -1.
  int trace(Dart start, bool mirrored, std::vector<std::uint16_t>& out, const std::vector<std::uint16_t>& best) {
    const int n = g_.dart_count();
    std::fill(label_.begin(), label_.end(), -1);
    out.resize(n);
    label_[start] = 0;
    label_[start ^ 1] = 1;
    order_[0] = start;
    order_[1] = start ^ 1;
    int next = 2;
    int state = best.empty() ? -1 : 0;
    for (int k = 0; k < n; ++k) {
      const Dart d = order_[k];
      const Dart t = mirrored ? g_.rotate_back(d) : g_.rotate(d);
      if (label_[t] < 0) {
        label_[t] = next;
        label_[t ^ 1] = next + 1;
        order_[next] = t;
        order_[next + 1] = t ^ 1;
        next += 2;
      }
      out[k] = static_cast<std::uint16_t>(label_[t]);
      if (state == 0) {
        if (out[k] < best[k]) state = -1;
        else if (out[k] > best[k]) return 1;
      }
    }
    return state;
  }

 private:
  const EmbeddedGraph& g_;
  std::vector<int> label_;
  std::vector<Dart> order_;
};

CanonicalCode canon_from_starts(const EmbeddedGraph& g, std::span<const Dart> starts, std::span<const Dart> mirror_starts,
                                bool include_reflection, CodeKind kind) {
  if (!g.is_connected()) fail(ErrorKind::Precondition, "canonical code requires a connected embedded graph");
  DartTracer tracer(g);
  std::vector<std::uint16_t> best, scratch;
  auto consider = [&](Dart s, bool mirrored) {
    if (tracer.trace(s, mirrored, scratch, best) < 0) best.swap(scratch);
  };
  for (Dart s : starts) consider(s, false);
  if (include_reflection)
    for (Dart s : mirror_starts) consider(s, true);
  CanonicalCode c;
  c.kind = kind;
  c.words.reserve(best.size() + 2);
  c.words.push_back(static_cast<std::uint16_t>(g.dart_count()));
  c.words.push_back(include_reflection ? 1 : 0);
  c.words.insert(c.words.end(), best.begin(), best.end());
  return c;
}

}  // namespace

CanonicalCode canon_embedded(const EmbeddedGraph& g, bool include_reflection) {
  if (g.vertex_count() > 1 && !g.is_connected()) {
    // Sorted component codes, behind a leading zero word that no connected
    // code carries.
    std::vector<std::vector<std::uint16_t>> parts;
    for (const auto& c : MapBuilder(g).build_components()) parts.push_back(canon_embedded(c, include_reflection).words);
    std::sort(parts.begin(), parts.end());
    CanonicalCode out;
    out.words = {0, static_cast<std::uint16_t>(parts.size())};
    for (const auto& p : parts) out.words.insert(out.words.end(), p.begin(), p.end());
    return out;
  }
  std::vector<Dart> all(g.dart_count());
  std::iota(all.begin(), all.end(), 0);
  return canon_from_starts(g, all, all, include_reflection, CodeKind::Embedded);
}

CanonicalCode canon_embedded_marked_face(const EmbeddedGraph& g, int face, bool include_reflection) {
  const auto darts = g.face(face);
  std::vector<Dart> starts(darts.begin(), darts.end());
  // Reversing orientation carries the face orbit F onto pair(F).
  std::vector<Dart> mirror_starts;
  for (Dart d : starts) mirror_starts.push_back(EmbeddedGraph::pair(d));
  return canon_from_starts(g, starts, mirror_starts, include_reflection, CodeKind::Disk);
}

bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b, bool include_reflection) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count()) return false;
  return canon_embedded(a, include_reflection) == canon_embedded(b, include_reflection);
}

// ---------------------------------------------------------------------------

namespace {

// Colour refinement whose colour names depend only on the isomorphism type.
std::vector<int> refine_colours(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      int deg = 0;
      for (int w = 0; w < n; ++w) deg += w == v ? 2 * adj[v][v] : adj[v][w];
      sig[v] = {deg, adj[v][v]};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  }
  int classes = 1 + *std::max_element(colour.begin(), colour.end());
  while (true) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int w = 0; w < n; ++w)
        if (w != v && adj[v][w] > 0) sig[v].second.emplace_back(colour[w], adj[v][w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int next_classes = static_cast<int>(sorted.size());
    colour.swap(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

// Lexicographically least adjacency encoding over colour-respecting vertex
// orders, by branch and bound. Row k of the encoding is
// A[p_k][p_k], A[p_0][p_k], ..., A[p_{k-1}][p_k].
class ConnectedCanon {
 public:
  explicit ConnectedCanon(const std::vector<std::vector<int>>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {
    colour_ = refine_colours(adj_);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    used_.assign(n_, 0);
    order_.assign(n_, -1);
    current_.resize(n_ * (n_ + 1) / 2);
  }

  std::vector<std::uint16_t> run() {
    search(0, 0);
    return best_;
  }

 private:
  // Compares current_ against best_ over the first `len` words.
  int compare_prefix(int len) const {
    for (int i = 0; i < len; ++i) {
      if (current_[i] < best_[i]) return -1;
      if (current_[i] > best_[i]) return 1;
    }
    return 0;
  }

  void search(int k, int offset) {
    if (k == n_) {
      if (best_.empty() || compare_prefix(offset) < 0) best_ = current_;
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[k]) continue;
      current_[offset] = static_cast<std::uint16_t>(adj_[v][v]);
      for (int i = 0; i < k; ++i) current_[offset + 1 + i] = static_cast<std::uint16_t>(adj_[order_[i]][v]);
      if (!best_.empty() && compare_prefix(offset + k + 1) > 0) continue;
      used_[v] = 1;
      order_[k] = v;
      search(k + 1, offset + k + 1);
      used_[v] = 0;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> colour_, slot_colour_, order_;
  std::vector<char> used_;
  std::vector<std::uint16_t> current_, best_;
};

std::vector<std::uint16_t> connected_words(const Multigraph& m) {
  auto code = ConnectedCanon(m.adjacency()).run();
  std::vector<std::uint16_t> out;
  out.push_back(static_cast<std::uint16_t>(m.vertex_count()));
  out.push_back(static_cast<std::uint16_t>(m.edge_count()));
  out.insert(out.end(), code.begin(), code.end());
  return out;
}

}  // namespace

CanonicalCode canon_multigraph(const Multigraph& m, int max_vertices) {
  const auto comp = m.components();
  const int ncomp = m.vertex_count() == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<std::uint16_t>> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> index(m.vertex_count(), -1);
    int size = 0;
    for (int v = 0; v < m.vertex_count(); ++v)
      if (comp[v] == c) index[v] = size++;
    if (size > max_vertices)
      fail(ErrorKind::Budget, "multigraph component with " + std::to_string(size) + " vertices exceeds canonical-form bound " +
                                  std::to_string(max_vertices));
    Multigraph part(size);
    for (auto [u, v] : m.edges())
      if (comp[u] == c) part.add_edge(index[u], index[v]);
    parts.push_back(connected_words(part));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalCode c;
  c.kind = CodeKind::Multigraph;
  c.words.push_back(static_cast<std::uint16_t>(m.vertex_count()));
  c.words.push_back(static_cast<std::uint16_t>(ncomp));
  for (const auto& p : parts) c.words.insert(c.words.end(), p.begin(), p.end());
  return c;
}

bool multigraph_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canon_multigraph(a) == canon_multigraph(b);
}

}  // namespace quadrimm
