// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact (integer counts and canonical codes); time limits are the only
// tolerances and are listed next to each check.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "quadrimm/canon.hpp"
#include "quadrimm/census.hpp"
#include "quadrimm/constructions.hpp"
#include "quadrimm/corpus.hpp"
#include "quadrimm/disk.hpp"
#include "quadrimm/enumerate.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/radial.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/transverse.hpp"
#include "quadrimm/validate.hpp"

using namespace quadrimm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %8.2fs%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::string str(long long v) { return std::to_string(v); }

DiskQuadrangulation tripod() { return {tripod_disk().map, tripod_disk().outer}; }

int spoke_start(const DiskQuadrangulation& d) {
  const auto b = d.boundary();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (d.map.degree(b[i]) == 3) return static_cast<int>(i);
  return -1;
}

CanonicalCode eps(const EmbeddedGraph& g) { return canon_multigraph(extract(g)); }

EmbeddedGraph random_relabel(const EmbeddedGraph& g, std::mt19937& rng) {
  std::vector<int> edges(g.edge_count());
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<Dart> perm(g.dart_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool flip = rng() & 1;
    perm[2 * e] = 2 * edges[e] + flip;
    perm[2 * e + 1] = 2 * edges[e] + !flip;
  }
  return g.relabel(perm);
}

const Corpus& corpus() {
  static const Corpus c = [] {
    CorpusOptions opt;
    opt.max_n = 16;
    opt.constructions = true;
    opt.glue_max_boundary = 12;
    opt.glue_max_vertices = 20;
    opt.workers = 4;
    return build_corpus(opt);
  }();
  return c;
}

}  // namespace

int main() {
  criterion(1, "census 2/5/17/71 and 69", 300, [] {
    Outcome o;
    const int sizes[] = {2, 4, 6, 8};
    const int want[] = {2, 5, 17, 71};
    for (int i = 0; i < 4; ++i) {
      const int got = census_connected_cubic_multigraphs(sizes[i]).connected_count;
      o.expect(got == want[i], "n=" + str(sizes[i]) + " gave " + str(got));
    }
    const auto d = census_disconnected_8();
    o.expect(d.disconnected_count == 69, "disconnected " + str(d.disconnected_count));
    const std::map<std::string, int> parts{{"2+2+2+2", 5}, {"2+2+4", 15}, {"2+6", 34}, {"4+4", 15}};
    o.expect(d.partition_counts == parts, "partition subtotals differ");
    return o;
  });

  criterion(2, "small n: 1, 0, 1 and the 10-vertex map", 60, [] {
    Outcome o;
    o.expect(enumerate_cq(8).size() == 1, "n=8");
    o.expect(enumerate_cq(9).empty(), "n=9");
    const auto ten = enumerate_cq(10);
    o.expect(ten.size() == 1, "n=10 count " + str(ten.size()));
    if (ten.size() == 1) o.expect(canon_embedded(ten[0]) == canon_embedded(ten_vertex_cq().map), "n=10 code");
    return o;
  });

  criterion(3, "enumeration oracle n=8..12", 3600, [] {
    Outcome o;
    for (int n = 8; n <= 12; ++n) {
      auto a = codes_of(enumerate_cq(n));
      auto b = codes_of(enumerate_cq_filtered(n, 12));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      o.expect(a == b, "n=" + str(n) + ": " + str(a.size()) + " vs " + str(b.size()));
    }
    return o;
  });

  criterion(4, "radial identities, corpus <= 14", 600, [] {
    Outcome o;
    int checked = 0, odd = 0;
    for (const auto& [code, e] : corpus().entries()) {
      if (e.map.vertex_count() > 14) continue;
      ++checked;
      const auto r = radial(e.map);
      o.expect(eps(radial(r)) == e.extraction, "eps(R^2) differs for " + e.provenance);
      if (validate_cq(e.map).nu4 % 2 == 1) {
        ++odd;
        o.expect(!extract(r).is_connected(), "eps(R) connected for odd nu: " + e.provenance);
      }
    }
    o.expect(checked > 0 && odd > 0, "empty sample");
    if (o.ok) o.detail = str(checked) + " maps, " + str(odd) + " with odd nu4";
    return o;
  });

  criterion(5, "spiral on the tripod", 300, [] {
    Outcome o;
    const auto d = tripod();
    const int s = spoke_start(d);
    try {
      spiral({d, s, 2});
      o.expect(false, "l=2 accepted");
    } catch (const Error& e) {
      o.expect(e.kind() == ErrorKind::Precondition, "l=2 wrong error kind");
    }
    std::map<int, CanonicalCode> e;
    for (int l = 1; l <= 25; ++l) {
      if (l == 2) continue;
      const auto g = spiral({d, s, l});
      o.expect(validate_cq(g).passes(), "l=" + str(l) + " invalid");
      e[l] = eps(g);
    }
    const int period = static_cast<int>(d.boundary().size()) - 1;
    for (int l = 3; l + period <= 25; ++l) o.expect(e[l] == e[l + period], "eps(S_l) != eps(S_l+5) at l=" + str(l));
    return o;
  });

  criterion(6, "vertex counts 8+m, m in {0,2..20}", 300, [] {
    Outcome o;
    const auto d = tripod();
    const int s = spoke_start(d);
    std::set<int> sizes;
    for (int l = 1; l <= 21; ++l) {
      if (l == 2) continue;
      sizes.insert(spiral({d, s, l}).vertex_count());
    }
    for (int m = 0; m <= 20; ++m)
      if (m != 1) o.expect(sizes.count(8 + m) == 1, "missing " + str(8 + m));
    o.expect(enumerate_cq(9).empty(), "a 9-vertex map exists");
    return o;
  });

  criterion(7, "cable period 4 on the cube walk", 300, [] {
    Outcome o;
    const auto g = cube().map;
    const std::vector<Turn> pattern{Turn::Right, Turn::Straight, Turn::Left, Turn::Right, Turn::Straight, Turn::Left};
    std::optional<CablingWalk> walk;
    for (Dart d = 0; d < g.dart_count() && !walk; ++d) {
      const auto w = walk_from_turns(g, d, pattern);
      try {
        resolve_walk(g, w);
        walk = w;
      } catch (const Error&) {
      }
    }
    o.expect(walk.has_value(), "no resolvable walk");
    if (!walk) return o;
    o.expect(resolve_walk(g, *walk).period() == 4, "|I_R| + |I| != 4");
    std::vector<CanonicalCode> e;
    for (int c = 0; c <= 11; ++c) {
      const auto h = cable(g, *walk, c);
      o.expect(validate_cq(h).passes(), "c=" + str(c) + " invalid");
      e.push_back(eps(h));
    }
    auto has_period = [&](int p) {
      for (std::size_t c = 0; c + p < e.size(); ++c)
        if (e[c] != e[c + p]) return false;
      return true;
    };
    o.expect(has_period(4), "period 4 fails");
    for (int p = 1; p < 4; ++p) o.expect(!has_period(p), "smaller period " + str(p));
    return o;
  });

  criterion(8, "1000 random gluings round trip", 1200, [] {
    Outcome o;
    const auto all = enumerate_disks(12, 20, false).disks;
    std::map<int, std::vector<const DiskQuadrangulation*>> by_len;
    for (const auto& d : all) by_len[static_cast<int>(d.boundary().size())].push_back(&d);
    std::mt19937 rng(20261019);
    int valid = 0, attempts = 0;
    while (valid < 1000 && attempts < 200000) {
      ++attempts;
      const auto& a = all[rng() % all.size()];
      const int n = static_cast<int>(a.boundary().size());
      const auto& pool = by_len[n];
      const auto& b = *pool[rng() % pool.size()];
      const BoundaryBijection phi{static_cast<int>(rng() % n), rng() % 2 == 0};
      TwoDisksResult r;
      try {
        r = two_disks(a, b, phi);
      } catch (const Error& e) {
        o.expect(e.kind() == ErrorKind::Precondition, std::string("unexpected error: ") + e.what());
        continue;
      }
      ++valid;
      o.expect(validate_cq(r.map).passes(), "invalid gluing at attempt " + str(attempts));
      const auto c = has_complete_transverse_cycle(r.map);
      o.expect(c.has_value(), "glued map has no cycle");
      if (!c) continue;
      const auto s = split_along_cycle(r.map, *c);
      o.expect(canon_embedded(two_disks(s.left, s.right, s.phi).map) == canon_embedded(r.map),
               "round trip differs at attempt " + str(attempts));
    }
    o.expect(valid == 1000, "only " + str(valid) + " legal triples");
    if (o.ok) o.detail = str(valid) + " legal of " + str(attempts) + " drawn";
    return o;
  });

  criterion(9, "irreducible disks B<=12, V<=30", 1800, [] {
    Outcome o;
    const auto rep = classify_irreducible(12, 30);
    o.expect(rep.counterexamples.empty(), str(rep.counterexamples.size()) + " counterexamples");
    o.expect(static_cast<int>(rep.base.size() + rep.buffered.size()) == rep.enumerated, "classes do not add up");
    for (const auto& d : enumerate_disks(12, 30, true).disks) {
      const auto r = validate_disk(d);
      o.expect(r.valid && r.b2 + r.i3 == 4, "b2 + i3 != 4");
    }
    if (o.ok) o.detail = str(rep.enumerated) + " disks: " + str(rep.base.size()) + " base, " + str(rep.buffered.size()) + " buffered";
    return o;
  });

  criterion(10, "invariant suites over the corpus", 1200, [] {
    Outcome o;
    std::mt19937 rng(5);
    for (const auto& [code, e] : corpus().entries()) {
      const auto& g = e.map;
      const auto r = validate_cq(g);
      o.expect(r.passes(), "invalid: " + e.provenance);
      o.expect(r.nu3 == 8 && r.faces == 6 + r.nu4, "counts: " + e.provenance);
      if (r.block_degree_counts) {
        const auto c = *r.block_degree_counts;
        o.expect(c.a3 + c.b3 == 8 && 3 * c.a3 + 2 * (c.a4 - c.b4) == 12, "bipartition identity: " + e.provenance);
      } else {
        o.expect(false, "not bipartite: " + e.provenance);
      }
      std::vector<int> used(g.edge_count(), 0);
      for (const auto& w : maximal_transverse_walks(g))
        for (Dart d : w.darts) ++used[EmbeddedGraph::edge_of(d)];
      o.expect(std::all_of(used.begin(), used.end(), [](int k) { return k == 1; }), "edge partition: " + e.provenance);
      o.expect(canon_embedded(random_relabel(g, rng)) == code, "code changed under relabeling: " + e.provenance);
    }
    if (o.ok) o.detail = str(corpus().size()) + " maps";
    return o;
  });

  criterion(11, "n=22 gives 30, 114 up to 22", 600, [] {
    Outcome o;
    int total = 0, at22 = 0;
    for (int n = 8; n <= 22; ++n) {
      const int k = static_cast<int>(enumerate_cq(n, 22).size());
      total += k;
      if (n == 22) at22 = k;
    }
    o.expect(at22 == 30, "n=22 gave " + str(at22));
    o.expect(total == 114, "total " + str(total));
    return o;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
