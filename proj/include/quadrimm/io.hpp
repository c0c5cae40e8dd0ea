#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadrimm/embedded_graph.hpp"
#include "quadrimm/multigraph.hpp"

namespace quadrimm {

/// One EMB record. `outer` is the optional disk header (a dart of the outer face).
struct EmbRecord {
  EmbeddedGraph map;
  std::optional<Dart> outer;
};

/// Parse errors are Error(Parse) carrying "line L, column C: ...".
EmbRecord parse_emb(std::string_view text);
/// All records of a file; records may be separated by blank lines.
std::vector<EmbRecord> parse_emb_records(std::string_view text);
std::string serialize_emb(const EmbeddedGraph& g, std::optional<Dart> outer = std::nullopt);

Multigraph parse_mgr(std::string_view text);
std::vector<Multigraph> parse_mgr_records(std::string_view text);
/// Normalized form: edges sorted ascending.
std::string serialize_mgr(const Multigraph& m);

std::string export_dot(const EmbeddedGraph& g);
std::string export_dot(const Multigraph& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string digest(std::string_view bytes);

struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::string> input_digests;  // path -> digest
  std::vector<std::string> output_codes;
  std::string output_digest;
  std::string tool_version;
  double seconds = 0;

  std::string to_json() const;
  static RunManifest from_json(std::string_view text);
};

}  // namespace quadrimm
