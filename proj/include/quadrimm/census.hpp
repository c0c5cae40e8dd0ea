#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quadrimm/canon.hpp"
#include "quadrimm/multigraph.hpp"

namespace quadrimm {

struct CensusResult {
  int n = 0;
  int connected_count = 0;
  int disconnected_count = 0;
  std::map<std::string, int> partition_counts;  // "2+2+4" -> classes
  std::vector<Multigraph> classes;               // ordered by code
  std::vector<CanonicalCode> codes;
};

/// Connected cubic multigraphs (loops and multi-edges allowed) on n vertices,
/// one per isomorphism class, by pairing up the 3n half-edge stubs. `seed`
/// shuffles the order in which vertices are processed; counts do not depend
/// on it. Throws Error(Precondition) unless n is even and 2 <= n <= 8.
CensusResult census_connected_cubic_multigraphs(int n, std::uint64_t seed = 0);

/// Every cubic multigraph on n vertices, connected or not, straight from the
/// stub pairings (no composition). Used to cross-check the composition below.
CensusResult census_all_cubic_multigraphs(int n, std::uint64_t seed = 0);

/// Disconnected cubic multigraphs on 8 vertices as multisets of connected
/// components, one entry per partition of 8 into even parts.
CensusResult census_disconnected_8();

/// The 140 classes on 8 vertices (connected first, then disconnected).
std::vector<CanonicalCode> all_cubic_classes_8();

}  // namespace quadrimm
