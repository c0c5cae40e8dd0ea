#include "quadrimm/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "quadrimm/constructions.hpp"
#include "quadrimm/disk.hpp"
#include "quadrimm/enumerate.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/config.hpp"
#include "quadrimm/io.hpp"
#include "quadrimm/radial.hpp"
#include "quadrimm/standard_maps.hpp"
#include "quadrimm/transverse.hpp"
#include "quadrimm/validate.hpp"

namespace quadrimm {

bool Corpus::add(const EmbeddedGraph& g, const std::string& provenance) {
  const auto report = validate_cq(g);
  if (!report.passes()) fail(ErrorKind::Precondition, "corpus entry is not a cubic quadrangulation: " + report.violations.front());
  auto code = canon_embedded(g);
  if (entries_.count(code)) return false;
  auto eps = canon_multigraph(extract(g));
  index_[eps].insert(code);
  entries_.emplace(std::move(code), CorpusEntry{g, provenance, std::move(eps)});
  return true;
}

namespace {

std::string file_name(const CanonicalCode& code) { return digest(code.hex()) + ".emb"; }

}  // namespace

void Corpus::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::string index = "# file\tembedded code\textraction code\tprovenance\n";
  for (const auto& [code, e] : entries_) {
    const auto name = file_name(code);
    write_file((dir / name).string(), serialize_emb(e.map));
    index += name + '\t' + code.hex() + '\t' + e.extraction.hex() + '\t' + e.provenance + '\n';
  }
  write_file((dir / "index.tsv").string(), index);
}

Corpus Corpus::load(const std::filesystem::path& dir) {
  Corpus c;
  std::istringstream lines(read_file((dir / "index.tsv").string()));
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream fields(line);
    for (std::string f; std::getline(fields, f, '\t');) cols.push_back(f);
    if (cols.size() != 4) fail(ErrorKind::Parse, "index.tsv line " + std::to_string(line_no) + ": expected 4 columns");
    const auto g = parse_emb(read_file((dir / cols[0]).string())).map;
    c.add(g, cols[3]);
    if (canon_embedded(g).hex() != cols[1])
      fail(ErrorKind::Parse, "index.tsv line " + std::to_string(line_no) + ": stored code does not match " + cols[0]);
  }
  return c;
}

Corpus build_corpus(const CorpusOptions& opt) {
  Corpus c;
  const int sizes = std::max(0, opt.max_n - 7);
  std::vector<std::vector<EmbeddedGraph>> found(sizes);
  parallel_for(sizes, opt.workers, [&](int i) { found[i] = enumerate_cq(8 + i, opt.max_n); });
  for (int i = 0; i < sizes; ++i)
    for (const auto& g : found[i]) c.add(g, "enum n=" + std::to_string(8 + i));
  if (!opt.constructions) return c;

  for (int i = 0; i < sizes; ++i)
    for (const auto& g : found[i]) c.add(radial(g), "radial of " + digest(canon_embedded(g).hex()));

  const DiskQuadrangulation tripod{tripod_disk().map, tripod_disk().outer};
  for (int l = 1; l <= 21; ++l) {
    if (l == 2) continue;
    c.add(spiral({tripod, 0, l}), "spiral tripod l=" + std::to_string(l));
  }

  const auto cube_map = cube().map;
  const std::vector<Turn> pattern{Turn::Right, Turn::Straight, Turn::Left, Turn::Right, Turn::Straight, Turn::Left};
  for (Dart d = 0; d < cube_map.dart_count(); ++d) {
    const auto w = walk_from_turns(cube_map, d, pattern);
    try {
      resolve_walk(cube_map, w);
    } catch (const Error&) {
      continue;
    }
    for (int k = 1; k <= 11; ++k) c.add(cable(cube_map, w, k), "cable cube " + format_walk(w) + " c=" + std::to_string(k));
    break;
  }

  const auto disks = enumerate_disks(opt.glue_max_boundary, opt.glue_max_vertices, false).disks;
  for (std::size_t a = 0; a < disks.size(); ++a)
    for (std::size_t b = a; b < disks.size(); ++b) {
      const int n = static_cast<int>(disks[a].boundary().size());
      if (static_cast<int>(disks[b].boundary().size()) != n) continue;
      for (int off = 0; off < n; ++off)
        for (bool rev : {true, false}) {
          try {
            const auto r = two_disks(disks[a], disks[b], {off, rev}, true);
            c.add(r.map, "two disks " + digest(disks[a].code().hex()) + " " + digest(disks[b].code().hex()) +
                             " offset=" + std::to_string(off) + (rev ? " reversed" : ""));
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::Precondition) throw;
          }
        }
    }
  return c;
}

CoverageReport coverage_report(const Corpus& corpus, const std::vector<CanonicalCode>& targets) {
  CoverageReport r;
  r.classes = static_cast<int>(targets.size());
  const auto& index = corpus.extraction_index();
  for (const auto& t : targets) {
    const auto it = index.find(t);
    if (it == index.end()) {
      r.missing.push_back(t);
      continue;
    }
    r.witnesses[t] = std::vector<CanonicalCode>(it->second.begin(), it->second.end());
  }
  return r;
}

}  // namespace quadrimm
