#pragma once

#include <map>
#include <vector>

#include "quadrimm/canon.hpp"
#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

/// One representative per class of cubic quadrangulations on n vertices
/// (reflection included), ordered by canonical code. Grows the sphere face by
/// face from a single quadrangle. Throws Error(Budget) when n > max_n.
std::vector<EmbeddedGraph> enumerate_cq(int n, int max_n = 16);

struct OracleStats {
  long long matrices = 0;     // bipartite degree-feasible graphs generated
  long long planar = 0;       // of those, 2-connected and planar
  long long not_triconnected = 0;
};

/// Independent graph-first enumeration: bipartite graphs with degrees 3/4 and
/// 2n-4 edges, filtered by 2-connectivity and planarity, embedded and kept
/// when all faces are quadrangles. Throws Error(Budget) when n > max_n.
std::vector<EmbeddedGraph> enumerate_cq_filtered(int n, int max_n = 12, OracleStats* stats = nullptr);

/// Canonical codes of a list of connected graphs, in the same order.
std::vector<CanonicalCode> codes_of(const std::vector<EmbeddedGraph>& graphs);

}  // namespace quadrimm
