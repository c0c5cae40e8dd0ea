#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quadrimm/canon.hpp"
#include "quadrimm/embedded_graph.hpp"

namespace quadrimm {

struct CorpusEntry {
  EmbeddedGraph map;
  std::string provenance;   // "enum n=12", "radial of <code>", ...
  CanonicalCode extraction;
};

/// Cubic quadrangulations keyed by embedded code, with an index from
/// extraction class to the quadrangulations realizing it.
class Corpus {
 public:
  /// Validates g and adds it unless its class is already present. Returns
  /// true when the entry is new. Throws Error(Precondition) when g is not a
  /// cubic quadrangulation.
  bool add(const EmbeddedGraph& g, const std::string& provenance);

  const std::map<CanonicalCode, CorpusEntry>& entries() const { return entries_; }
  const std::map<CanonicalCode, std::set<CanonicalCode>>& extraction_index() const { return index_; }
  std::size_t size() const { return entries_.size(); }

  /// Writes <dir>/<code>.emb for every entry plus index.tsv.
  void save(const std::filesystem::path& dir) const;
  /// Reads a directory written by save; codes are recomputed and checked
  /// against the file names.
  static Corpus load(const std::filesystem::path& dir);

 private:
  std::map<CanonicalCode, CorpusEntry> entries_;
  std::map<CanonicalCode, std::set<CanonicalCode>> index_;
};

struct CorpusOptions {
  int max_n = 14;              // enumerate every size 8..max_n
  bool constructions = false;  // add radial images and the spiral, cable and gluing sweeps
  int glue_max_boundary = 8;   // disks used by the gluing sweep
  int glue_max_vertices = 12;
  int workers = 1;
};

/// Enumeration results plus, optionally, construction outputs.
Corpus build_corpus(const CorpusOptions& opt);

struct CoverageReport {
  int classes = 0;
  std::map<CanonicalCode, std::vector<CanonicalCode>> witnesses;  // achieved class -> embedded codes
  std::vector<CanonicalCode> missing;
  int achieved() const { return static_cast<int>(witnesses.size()); }
};

/// Matches the corpus extractions against `targets`, normally
/// all_cubic_classes_8().
CoverageReport coverage_report(const Corpus& corpus, const std::vector<CanonicalCode>& targets);

}  // namespace quadrimm
