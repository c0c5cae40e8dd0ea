#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadrimm/canon.hpp"
#include "quadrimm/census.hpp"
#include "quadrimm/config.hpp"
#include "quadrimm/constructions.hpp"
#include "quadrimm/corpus.hpp"
#include "quadrimm/disk.hpp"
#include "quadrimm/enumerate.hpp"
#include "quadrimm/error.hpp"
#include "quadrimm/io.hpp"
#include "quadrimm/radial.hpp"
#include "quadrimm/transverse.hpp"
#include "quadrimm/validate.hpp"

using namespace quadrimm;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "quadrimm 0.1.0";

enum Exit { Ok = 0, ValidationFailed = 2, PreconditionFailed = 3, BudgetRefused = 4 };

// Everything a subcommand produces; main prints it, replay compares it.
struct Session {
  bool json_out = false;
  Config config;
  std::string out;
  std::vector<std::string> codes;
  std::map<std::string, std::string> inputs;
  std::string output_path;

  std::string load(const std::string& path) {
    auto text = read_file(path);
    inputs[path] = digest(text);
    return text;
  }
  std::vector<EmbRecord> load_emb(const std::string& path) {
    auto recs = parse_emb_records(load(path));
    if (recs.empty()) fail(ErrorKind::Parse, path + ": no records");
    return recs;
  }
  DiskQuadrangulation load_disk(const std::string& path) {
    const auto rec = load_emb(path).front();
    if (!rec.outer) fail(ErrorKind::Precondition, path + ": disk input needs an 'outer:' line");
    return {rec.map, *rec.outer};
  }
  void emit_json(const json& j) { out += j.dump(2) + "\n"; }
  // Graph outputs: EMB text, or a JSON object per graph.
  void emit_graphs(const std::vector<EmbeddedGraph>& gs, const std::vector<std::string>& notes = {}) {
    json arr = json::array();
    for (const auto& g : gs) {
      const auto code = canon_embedded(g).hex();
      codes.push_back(code);
      if (json_out) {
        arr.push_back({{"vertices", g.vertex_count()}, {"code", code}, {"emb", serialize_emb(g)}});
      } else {
        if (!out.empty()) out += "\n";
        out += serialize_emb(g);
      }
    }
    if (json_out) {
      json j{{"graphs", arr}};
      if (!notes.empty()) j["notes"] = notes;
      emit_json(j);
    } else {
      for (const auto& n : notes) out += "# " + n + "\n";
    }
  }
};

json report_json(const ValidationReport& r) {
  json j{{"passes", r.passes()}, {"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces},
         {"connected", r.is_connected}, {"spherical", r.is_spherical}, {"simple", r.is_simple},
         {"nu3", r.nu3}, {"nu4", r.nu4}, {"violations", r.violations}};
  if (r.block_degree_counts) {
    const auto c = *r.block_degree_counts;
    j["blocks"] = {{"a3", c.a3}, {"a4", c.a4}, {"b3", c.b3}, {"b4", c.b4}};
  }
  return j;
}

json disk_json(const DiskReport& r) {
  return {{"valid", r.valid}, {"boundary", r.boundary_length}, {"b2", r.b2}, {"b3", r.b3},
          {"i3", r.i3}, {"i4", r.i4}, {"shape", r.shape}, {"violations", r.violations}};
}

std::string census_line(const CensusResult& r) {
  std::string s = "n=" + std::to_string(r.n) + " connected=" + std::to_string(r.connected_count) +
                  " disconnected=" + std::to_string(r.disconnected_count);
  for (const auto& [p, k] : r.partition_counts) s += " " + p + ":" + std::to_string(k);
  return s + "\n";
}

json census_json(const CensusResult& r) {
  json parts = json::object();
  for (const auto& [p, k] : r.partition_counts) parts[p] = k;
  std::vector<std::string> codes;
  for (const auto& c : r.codes) codes.push_back(c.hex());
  return {{"n", r.n}, {"connected", r.connected_count}, {"disconnected", r.disconnected_count},
          {"partitions", parts}, {"codes", codes}};
}

bool is_mgr(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    return tok == "mgr";
  }
  return false;
}

int run(const std::vector<std::string>& args, Session& s);

int replay(const std::string& path, Session& s) {
  const auto m = RunManifest::from_json(s.load(path));
  const auto it = m.parameters.find("argv");
  if (it == m.parameters.end()) fail(ErrorKind::Parse, path + ": manifest has no argv");
  const auto argv = json::parse(it->second).get<std::vector<std::string>>();
  Session again;
  again.config = s.config;
  const int code = run(argv, again);
  std::vector<std::string> problems;
  for (const auto& [file, d] : m.input_digests) {
    const auto found = again.inputs.find(file);
    if (found == again.inputs.end() || found->second != d) problems.push_back("input changed: " + file);
  }
  if (again.codes != m.output_codes) problems.push_back("output codes differ");
  if (digest(again.out) != m.output_digest) problems.push_back("output digest differs");
  if (s.json_out) {
    s.emit_json({{"replayed", m.subcommand}, {"exit", code}, {"identical", problems.empty()}, {"problems", problems}});
  } else {
    s.out += problems.empty() ? "replay identical: " + m.subcommand + "\n" : "replay differs: " + m.subcommand + "\n";
    for (const auto& p : problems) s.out += "  " + p + "\n";
  }
  return problems.empty() ? Ok : ValidationFailed;
}

int run(const std::vector<std::string>& args, Session& s) {
  CLI::App app{"Cubic quadrangulations of the sphere: validation, transverse walks, disks, constructions and enumeration"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json_out, "machine-readable output");
  std::string config_path, manifest_path;
  app.add_option("--config", config_path, "key = value file with budgets and workers");
  app.add_option("--manifest", manifest_path, "write a run manifest (JSON) here");
  app.add_option("-o,--output", s.output_path, "write output here instead of stdout");

  std::string file, file2;
  bool flag_a = false, flag_b = false;
  int n = 0, n_to = 0, offset = 0, l = 1, label_start = 0, c = 0, max_b = 0, max_v = 0;
  std::string walk_path, corpus_dir;

  auto* validate = app.add_subcommand("validate", "check cubic quadrangulation (or disk) invariants");
  validate->add_option("file", file, "EMB file")->required();
  validate->add_flag("--disk", flag_a, "treat records as disks (outer dart 0 unless given)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of EMB or MGR records");
  dot->add_option("file", file)->required();

  auto* canon = app.add_subcommand("canon", "canonical code of each record");
  canon->add_option("file", file)->required();
  canon->add_flag("--chiral", flag_a, "do not identify mirror images");

  auto* iso = app.add_subcommand("iso", "isomorphism verdict for the first records of two files");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();
  iso->add_flag("--chiral", flag_a, "do not identify mirror images");

  auto* extract_cmd = app.add_subcommand("extract", "cubic multigraph of complete transverse paths");
  extract_cmd->add_option("file", file)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "delete closed transversals and smooth");
  reduce_cmd->add_option("file", file)->required();

  auto* walks = app.add_subcommand("walks", "maximal transverse walks");
  walks->add_option("file", file)->required();

  auto* td = app.add_subcommand("td-cycle", "cycle made of complete transverse paths, if any");
  td->add_option("file", file)->required();

  auto* disks = app.add_subcommand("disks", "enumerate quadrangulated disks");
  disks->add_option("--max-boundary", max_b)->required();
  disks->add_option("--max-vertices", max_v)->required();
  disks->add_flag("--irreducible", flag_a, "irreducible disks only");

  auto* classify = app.add_subcommand("classify-disks", "split irreducible disks into base disks and bufferings");
  classify->add_option("--max-boundary,--bound", max_b, "boundary length bound")->required();
  classify->add_option("--max-vertices", max_v, "vertex bound (default: disk_max_vertices)");

  auto* glue = app.add_subcommand("two-disks", "glue two disks along their boundaries");
  glue->add_option("a", file)->required();
  glue->add_option("b", file2)->required();
  glue->add_option("--offset", offset);
  glue->add_flag("--reverse", flag_a, "boundary orders run opposite ways");
  glue->add_flag("--auto-fix", flag_b, "unbuffer / reduce instead of warning");

  auto* split = app.add_subcommand("split", "cut along a cycle of complete transverse paths");
  split->add_option("file", file)->required();

  auto* radial_cmd = app.add_subcommand("radial", "radial graph");
  radial_cmd->add_option("file", file)->required();

  auto* spiral_cmd = app.add_subcommand("spiral", "spiral construction on a disk");
  spiral_cmd->add_option("disk", file)->required();
  spiral_cmd->add_option("--l", l)->required();
  spiral_cmd->add_option("--label-start", label_start, "boundary position of label 0");

  auto* cable_cmd = app.add_subcommand("cable", "cable construction along a dual walk");
  cable_cmd->add_option("file", file)->required();
  cable_cmd->add_option("--walk", walk_path, "walk file: eK[R|S|L] tokens")->required();
  cable_cmd->add_option("--c", c)->required();

  auto* enum_cmd = app.add_subcommand("enum", "all cubic quadrangulations with n vertices");
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--to", n_to, "enumerate n..to");
  enum_cmd->add_flag("--oracle", flag_a, "graph-first planarity filter instead of face growth");

  auto* census = app.add_subcommand("census", "cubic multigraph census");
  auto* census_n = census->add_option("--n", n);
  auto* census_d = census->add_flag("--disconnected-8", flag_a);
  census_n->excludes(census_d);

  auto* build = app.add_subcommand("build-corpus", "enumerate (and construct) into a corpus directory");
  build->add_option("--out", corpus_dir)->required();
  build->add_option("--max-n", n)->required();
  build->add_flag("--constructions", flag_a, "add radial, spiral, cable and gluing outputs");
  build->add_option("--glue-boundary", max_b, "gluing disks: boundary bound");
  build->add_option("--glue-vertices", max_v, "gluing disks: vertex bound");

  auto* coverage = app.add_subcommand("coverage", "which 8-vertex cubic multigraph classes the corpus realizes");
  coverage->add_option("--corpus", corpus_dir)->required();

  auto* replay_cmd = app.add_subcommand("replay", "rerun a manifest and compare outputs");
  replay_cmd->add_option("manifest", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    const int code = app.exit(e, o, err);
    s.out += o.str();
    std::cerr << err.str();
    return code == 0 ? Ok : PreconditionFailed;
  }
  if (!config_path.empty()) s.config = load_config(config_path);

  const auto t0 = std::chrono::steady_clock::now();
  int code = Ok;
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (sub == classify && max_v == 0) max_v = s.config.disk_max_vertices;
  if ((sub == disks || sub == classify) &&
      (max_b > s.config.disk_max_boundary || max_v > s.config.disk_max_vertices))
    fail(ErrorKind::Budget, "disk bounds exceed disk_max_boundary = " + std::to_string(s.config.disk_max_boundary) +
                                " / disk_max_vertices = " + std::to_string(s.config.disk_max_vertices));

  if (sub == validate) {
    json arr = json::array();
    int i = 0;
    for (const auto& rec : s.load_emb(file)) {
      if (flag_a || rec.outer) {
        const auto r = validate_disk({rec.map, rec.outer.value_or(0)});
        if (!r.valid) code = ValidationFailed;
        arr.push_back(disk_json(r));
        s.out += "record " + std::to_string(i) + ": disk " + (r.valid ? "PASS" : "FAIL") + " boundary=" +
                 std::to_string(r.boundary_length) + " b2=" + std::to_string(r.b2) + " b3=" + std::to_string(r.b3) +
                 " i3=" + std::to_string(r.i3) + " i4=" + std::to_string(r.i4) + " shape=" + r.shape + "\n";
        for (const auto& v : r.violations) s.out += "  violation: " + v + "\n";
      } else {
        const auto r = validate_cq(rec.map);
        if (!r.passes()) code = ValidationFailed;
        arr.push_back(report_json(r));
        s.out += "record " + std::to_string(i) + ": " + (r.passes() ? "PASS" : "FAIL") + " V=" +
                 std::to_string(r.vertices) + " E=" + std::to_string(r.edges) + " F=" + std::to_string(r.faces) +
                 " nu3=" + std::to_string(r.nu3) + " nu4=" + std::to_string(r.nu4) + "\n";
        for (const auto& v : r.violations) s.out += "  violation: " + v + "\n";
      }
      ++i;
    }
    if (s.json_out) {
      s.out.clear();
      s.emit_json({{"records", arr}});
    }
  } else if (sub == dot) {
    const auto text = s.load(file);
    if (is_mgr(text)) {
      for (const auto& m : parse_mgr_records(text)) s.out += export_dot(m);
    } else {
      for (const auto& rec : parse_emb_records(text)) s.out += export_dot(rec.map);
    }
  } else if (sub == canon) {
    const auto text = s.load(file);
    if (is_mgr(text)) {
      for (const auto& m : parse_mgr_records(text)) s.codes.push_back(canon_multigraph(m).hex());
    } else {
      for (const auto& rec : parse_emb_records(text))
        s.codes.push_back((rec.outer ? canon_embedded_marked_face(rec.map, rec.map.face_of(*rec.outer), !flag_a)
                                     : canon_embedded(rec.map, !flag_a))
                              .hex());
    }
    if (s.json_out) s.emit_json({{"codes", s.codes}});
    else
      for (const auto& h : s.codes) s.out += h + "\n";
  } else if (sub == iso) {
    const auto ta = s.load(file), tb = s.load(file2);
    bool same = false;
    if (is_mgr(ta) != is_mgr(tb)) fail(ErrorKind::Precondition, "cannot compare an embedded graph with a multigraph");
    if (is_mgr(ta)) same = multigraph_isomorphic(parse_mgr(ta), parse_mgr(tb));
    else same = embedded_isomorphic(parse_emb(ta).map, parse_emb(tb).map, !flag_a);
    if (s.json_out) s.emit_json({{"isomorphic", same}});
    else s.out += same ? "isomorphic\n" : "not isomorphic\n";
  } else if (sub == extract_cmd) {
    json arr = json::array();
    for (const auto& rec : s.load_emb(file)) {
      const auto m = extract(rec.map);
      const auto h = canon_multigraph(m, 64).hex();
      s.codes.push_back(h);
      arr.push_back({{"code", h}, {"mgr", serialize_mgr(m)}});
      if (!s.json_out) s.out += serialize_mgr(m);
    }
    if (s.json_out) s.emit_json({{"extractions", arr}});
  } else if (sub == reduce_cmd) {
    std::vector<EmbeddedGraph> gs;
    std::vector<std::string> notes;
    for (const auto& rec : s.load_emb(file)) gs.push_back(reduce(rec.map, &notes));
    s.emit_graphs(gs, notes);
  } else if (sub == walks) {
    const auto g = s.load_emb(file).front().map;
    json arr = json::array();
    for (const auto& w : maximal_transverse_walks(g)) {
      const auto vs = w.vertices(g);
      const bool path = w.kind == WalkKind::CompletePath;
      arr.push_back({{"kind", path ? "path" : "closed"}, {"vertices", vs}});
      s.out += path ? "path  " : "closed";
      for (int v : vs) s.out += " " + std::to_string(v);
      s.out += "\n";
    }
    if (s.json_out) {
      s.out.clear();
      s.emit_json({{"walks", arr}});
    }
  } else if (sub == td) {
    const auto cyc = has_complete_transverse_cycle(s.load_emb(file).front().map);
    if (s.json_out) s.emit_json({{"cycle", cyc ? json(cyc->vertices) : json(nullptr)}});
    else if (!cyc) s.out += "none\n";
    else {
      s.out += "cycle";
      for (int v : cyc->vertices) s.out += " " + std::to_string(v);
      s.out += "\n";
    }
  } else if (sub == disks) {
    const auto e = enumerate_disks(max_b, max_v, flag_a, s.config.node_budget);
    json arr = json::array();
    for (const auto& d : e.disks) {
      const auto h = d.code().hex();
      s.codes.push_back(h);
      if (s.json_out) arr.push_back({{"boundary", d.boundary().size()}, {"code", h}, {"emb", serialize_emb(d.map, d.outer)}});
      else s.out += (s.out.empty() ? "" : "\n") + serialize_emb(d.map, d.outer);
    }
    if (s.json_out) s.emit_json({{"disks", arr}, {"nodes", e.nodes}});
  } else if (sub == classify) {
    const auto r = classify_irreducible(max_b, max_v, s.config.node_budget);
    if (!r.counterexamples.empty()) code = ValidationFailed;
    for (const auto& h : r.base) s.codes.push_back(h.hex());
    for (const auto& h : r.buffered) s.codes.push_back(h.hex());
    if (s.json_out) {
      s.emit_json({{"enumerated", r.enumerated}, {"base", r.base.size()}, {"buffered", r.buffered.size()},
                   {"counterexamples", r.counterexamples.size()}});
    } else {
      s.out += "irreducible disks: " + std::to_string(r.enumerated) + "\nbase (b2 >= 1): " +
               std::to_string(r.base.size()) + "\nbufferings of base disks: " + std::to_string(r.buffered.size()) +
               "\ncounterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
      for (const auto& d : r.counterexamples) s.out += serialize_emb(d.map, d.outer);
    }
  } else if (sub == glue) {
    const auto r = two_disks(s.load_disk(file), s.load_disk(file2), {offset, flag_a}, flag_b);
    const auto rep = validate_cq(r.map);
    auto notes = r.notes;
    for (const auto& v : rep.violations) notes.push_back("violation: " + v);
    if (!rep.passes()) code = ValidationFailed;
    s.emit_graphs({r.map}, notes);
  } else if (sub == split) {
    const auto g = s.load_emb(file).front().map;
    const auto cyc = has_complete_transverse_cycle(g);
    if (!cyc) fail(ErrorKind::Precondition, "no cycle of complete transverse paths");
    const auto parts = split_along_cycle(g, *cyc);
    for (const auto* d : {&parts.left, &parts.right}) {
      s.codes.push_back(d->code().hex());
      s.out += (s.out.empty() ? "" : "\n") + serialize_emb(d->map, d->outer);
    }
    s.out += "# glue with: two-disks --offset " + std::to_string(parts.phi.offset) + (parts.phi.reversed ? " --reverse" : "") + "\n";
  } else if (sub == radial_cmd) {
    std::vector<EmbeddedGraph> gs;
    for (const auto& rec : s.load_emb(file)) gs.push_back(radial(rec.map));
    s.emit_graphs(gs);
  } else if (sub == spiral_cmd) {
    s.emit_graphs({spiral({s.load_disk(file), label_start, l})});
  } else if (sub == cable_cmd) {
    const auto g = s.load_emb(file).front().map;
    const auto w = parse_walk(s.load(walk_path));
    const auto h = cable(g, w, c);
    if (!validate_cq(h).passes()) code = ValidationFailed;
    s.emit_graphs({h}, {"walk " + format_walk(w) + ", period " + std::to_string(resolve_walk(g, w).period())});
  } else if (sub == enum_cmd) {
    const int last = std::max(n, n_to);
    std::vector<std::vector<EmbeddedGraph>> found(last - n + 1);
    parallel_for(static_cast<int>(found.size()), s.config.workers, [&](int i) {
      found[i] = flag_a ? enumerate_cq_filtered(n + i, s.config.oracle_max_n) : enumerate_cq(n + i, s.config.enum_max_n);
    });
    json counts = json::object();
    std::vector<EmbeddedGraph> all;
    for (std::size_t i = 0; i < found.size(); ++i) {
      counts[std::to_string(n + i)] = found[i].size();
      all.insert(all.end(), found[i].begin(), found[i].end());
    }
    s.emit_graphs(all);
    if (!s.json_out)
      for (const auto& [k, v] : counts.items()) s.out += "# n=" + k + ": " + std::to_string(v.get<int>()) + "\n";
  } else if (sub == census) {
    if (flag_a) {
      const auto r = census_disconnected_8();
      for (const auto& h : r.codes) s.codes.push_back(h.hex());
      if (s.json_out) s.emit_json(census_json(r));
      else s.out += census_line(r);
    } else {
      std::vector<int> sizes = n ? std::vector<int>{n} : std::vector<int>{2, 4, 6, 8};
      std::vector<CensusResult> rs(sizes.size());
      parallel_for(static_cast<int>(sizes.size()), s.config.workers,
                   [&](int i) { rs[i] = census_connected_cubic_multigraphs(sizes[i]); });
      json arr = json::array();
      for (const auto& r : rs) {
        for (const auto& h : r.codes) s.codes.push_back(h.hex());
        arr.push_back(census_json(r));
        if (!s.json_out) s.out += census_line(r);
      }
      if (s.json_out) s.emit_json({{"census", arr}});
    }
  } else if (sub == build) {
    CorpusOptions opt;
    opt.max_n = n;
    opt.constructions = flag_a;
    opt.workers = s.config.workers;
    if (max_b) opt.glue_max_boundary = max_b;
    if (max_v) opt.glue_max_vertices = max_v;
    if (n > s.config.enum_max_n)
      fail(ErrorKind::Budget, "--max-n " + std::to_string(n) + " exceeds enum_max_n = " + std::to_string(s.config.enum_max_n));
    const auto corpus = build_corpus(opt);
    corpus.save(corpus_dir);
    for (const auto& [k, e] : corpus.entries()) s.codes.push_back(k.hex());
    if (s.json_out) s.emit_json({{"entries", corpus.size()}, {"extraction_classes", corpus.extraction_index().size()}});
    else
      s.out += "entries: " + std::to_string(corpus.size()) + "\nextraction classes: " +
               std::to_string(corpus.extraction_index().size()) + "\n";
  } else if (sub == coverage) {
    const auto corpus = Corpus::load(corpus_dir);
    const auto r = coverage_report(corpus, all_cubic_classes_8());
    std::vector<std::string> missing;
    for (const auto& m : r.missing) missing.push_back(m.hex());
    s.codes = missing;
    if (s.json_out) {
      json achieved = json::object();
      for (const auto& [cls, ws] : r.witnesses) {
        std::vector<std::string> hs;
        for (const auto& w : ws) hs.push_back(w.hex());
        achieved[cls.hex()] = hs;
      }
      s.emit_json({{"classes", r.classes}, {"achieved", r.achieved()}, {"missing", missing}, {"witnesses", achieved}});
    } else {
      s.out += "classes: " + std::to_string(r.classes) + "\nachieved: " + std::to_string(r.achieved()) +
               "\nmissing: " + std::to_string(missing.size()) + "\n";
      for (const auto& h : missing) s.out += "  " + h + "\n";
    }
  } else if (sub == replay_cmd) {
    code = replay(file, s);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!manifest_path.empty()) {
    RunManifest m;
    m.subcommand = name;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto& a = args[i];
      if (a == "--manifest" || a == "-o" || a == "--output") {
        ++i;
        continue;
      }
      if (a.rfind("--manifest=", 0) == 0 || a.rfind("--output=", 0) == 0) continue;
      kept.push_back(a);
    }
    m.parameters["argv"] = json(kept).dump();
    m.input_digests = s.inputs;
    m.output_codes = s.codes;
    m.output_digest = digest(s.out);
    m.tool_version = kVersion;
    m.seconds = secs;
    write_file(manifest_path, m.to_json());
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  int code = Ok;
  try {
    s.config = default_config();
    code = run(std::vector<std::string>(argv + 1, argv + argc), s);
    if (!s.output_path.empty()) {
      write_file(s.output_path, s.out);
      return code;
    }
  } catch (const Error& e) {
    std::cout << s.out;
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Budget ? BudgetRefused : PreconditionFailed;
  } catch (const std::exception& e) {
    std::cout << s.out;
    std::cerr << "error: " << e.what() << "\n";
    return PreconditionFailed;
  }
  std::cout << s.out;
  return code;
}
