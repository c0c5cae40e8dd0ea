#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quadrimm/embedded_graph.hpp"
#include "quadrimm/multigraph.hpp"

namespace quadrimm {

enum class CodeKind : std::uint8_t { Embedded = 0, Disk = 1, Multigraph = 2 };

/// Totally ordered isomorphism key. Equal codes of the same kind identify
/// isomorphic objects.
struct CanonicalCode {
  CodeKind kind = CodeKind::Embedded;
  std::vector<std::uint16_t> words;

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& text);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

/// Code of a connected embedded graph up to orientation-preserving
/// relabeling, and also up to reflection when `include_reflection` is set.
/// A disconnected map is coded by the sorted codes of its components.
CanonicalCode canon_embedded(const EmbeddedGraph& g, bool include_reflection = true);

/// Same, with the traversal restricted to start darts in `face`; the result
/// identifies the map together with that marked face.
CanonicalCode canon_embedded_marked_face(const EmbeddedGraph& g, int face, bool include_reflection = true);

/// Code of a multigraph up to vertex permutation. Refuses (Error::Budget)
/// components larger than `max_vertices`.
CanonicalCode canon_multigraph(const Multigraph& m, int max_vertices = 12);

/// Isomorphism verdicts built on the codes.
bool embedded_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b, bool include_reflection = true);
bool multigraph_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace quadrimm
