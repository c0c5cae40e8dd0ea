#include "quadrimm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "quadrimm/error.hpp"

namespace quadrimm {

namespace {

struct Token {
  std::string_view text;
  int line, column;
};

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

// Lines with their numbers, comments ('#') and trailing blanks stripped.
struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    out.push_back({line, number});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Token> tokens(const Line& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto s = line.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back({s.substr(i, j - i), line.number, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

long long to_int(const Token& t) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    parse_fail(t.line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  return value;
}

// Groups non-blank lines into records, each starting at a header keyword.
std::vector<std::vector<Line>> records(std::string_view text, std::string_view keyword) {
  std::vector<std::vector<Line>> out;
  for (const auto& line : split_lines(text)) {
    if (line.text.empty()) continue;
    const auto toks = tokens(line);
    if (toks[0].text == keyword) out.emplace_back();
    if (out.empty()) parse_fail(line.number, 1, "expected '" + std::string(keyword) + "' header");
    out.back().push_back(line);
  }
  return out;
}

EmbRecord parse_emb_lines(const std::vector<Line>& lines) {
  const auto head = tokens(lines[0]);
  if (head.size() != 2) parse_fail(lines[0].number, 1, "header must be 'emb <n_darts>'");
  const long long n = to_int(head[1]);
  if (n < 0 || n % 2 != 0) parse_fail(head[1].line, head[1].column, "dart count must be even and nonnegative");
  EmbRecord rec;
  std::optional<std::vector<Token>> sigma;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens(lines[i]);
    if (toks[0].text == "outer:") {
      if (toks.size() != 2) parse_fail(lines[i].number, toks[0].column, "expected 'outer: <dart>'");
      const auto d = to_int(toks[1]);
      if (d < 0 || d >= n) parse_fail(toks[1].line, toks[1].column, "outer dart out of range");
      rec.outer = static_cast<Dart>(d);
    } else if (toks[0].text == "sigma:") {
      if (sigma) parse_fail(lines[i].number, 1, "duplicate sigma line");
      sigma.emplace(toks.begin() + 1, toks.end());
    } else {
      parse_fail(lines[i].number, toks[0].column, "unexpected '" + std::string(toks[0].text) + "'");
    }
  }
  if (!sigma) parse_fail(lines.back().number, 1, "missing sigma line");
  if (static_cast<long long>(sigma->size()) != n)
    parse_fail(lines[0].number, head[1].column,
               "sigma lists " + std::to_string(sigma->size()) + " images for " + std::to_string(n) + " darts");
  std::vector<Dart> rot(n);
  std::vector<char> hit(n, 0);
  for (long long d = 0; d < n; ++d) {
    const auto& t = (*sigma)[d];
    const auto v = to_int(t);
    if (v < 0 || v >= n) parse_fail(t.line, t.column, "image of dart " + std::to_string(d) + " out of range");
    if (hit[v]) parse_fail(t.line, t.column, "sigma is not a permutation: dart " + std::to_string(v) + " is the image of two darts");
    hit[v] = 1;
    rot[d] = static_cast<Dart>(v);
  }
  rec.map = EmbeddedGraph(std::move(rot));
  return rec;
}

Multigraph parse_mgr_lines(const std::vector<Line>& lines) {
  const auto head = tokens(lines[0]);
  if (head.size() != 2) parse_fail(lines[0].number, 1, "header must be 'mgr <n_vertices>'");
  const auto n = to_int(head[1]);
  if (n < 0) parse_fail(head[1].line, head[1].column, "negative vertex count");
  Multigraph m(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (toks.size() != 2) parse_fail(lines[i].number, 1, "expected an edge 'u v'");
    const auto u = to_int(toks[0]), v = to_int(toks[1]);
    if (u < 0 || u >= n) parse_fail(toks[0].line, toks[0].column, "vertex out of range");
    if (v < 0 || v >= n) parse_fail(toks[1].line, toks[1].column, "vertex out of range");
    m.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return m;
}

}  // namespace

std::vector<EmbRecord> parse_emb_records(std::string_view text) {
  std::vector<EmbRecord> out;
  for (const auto& r : records(text, "emb")) out.push_back(parse_emb_lines(r));
  return out;
}

EmbRecord parse_emb(std::string_view text) {
  auto all = parse_emb_records(text);
  if (all.size() != 1) fail(ErrorKind::Parse, "expected exactly one emb record, found " + std::to_string(all.size()));
  return std::move(all[0]);
}

std::string serialize_emb(const EmbeddedGraph& g, std::optional<Dart> outer) {
  std::ostringstream out;
  out << "emb " << g.dart_count() << '\n';
  if (outer) out << "outer: " << *outer << '\n';
  out << "sigma:";
  for (Dart d : g.rotation()) out << ' ' << d;
  out << '\n';
  return out.str();
}

std::vector<Multigraph> parse_mgr_records(std::string_view text) {
  std::vector<Multigraph> out;
  for (const auto& r : records(text, "mgr")) out.push_back(parse_mgr_lines(r));
  return out;
}

Multigraph parse_mgr(std::string_view text) {
  auto all = parse_mgr_records(text);
  if (all.size() != 1) fail(ErrorKind::Parse, "expected exactly one mgr record, found " + std::to_string(all.size()));
  return std::move(all[0]);
}

std::string serialize_mgr(const Multigraph& m) {
  auto edges = m.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "mgr " << m.vertex_count() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string node_style(int degree) {
  if (degree == 3) return "shape=circle, style=filled, fillcolor=black, fontcolor=white";
  if (degree == 4) return "shape=circle, style=filled, fillcolor=white";
  return "shape=box";
}

}  // namespace

std::string export_dot(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << " [" << node_style(g.degree(v)) << "];\n";
  for (Dart d = 0; d < g.dart_count(); d += 2) out << "  v" << g.vertex_of(d) << " -- v" << g.head_of(d) << ";\n";
  out << "  // faces\n";
  for (int f = 0; f < g.face_count(); ++f) {
    out << "  // f" << f << ':';
    for (int v : g.face_vertices(f)) out << " v" << v;
    out << '\n';
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Multigraph& m) {
  const auto deg = m.degrees();
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < m.vertex_count(); ++v) out << "  v" << v << " [" << node_style(deg[v]) << "];\n";
  auto edges = m.edges();
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Precondition, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Precondition, "cannot write " + path);
  out << content;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["parameters"] = parameters;
  j["input_digests"] = input_digests;
  j["output_codes"] = output_codes;
  j["output_digest"] = output_digest;
  j["tool_version"] = tool_version;
  j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("manifest: ") + e.what());
  }
  RunManifest m;
  try {
    m.subcommand = j.at("subcommand").get<std::string>();
    m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    m.input_digests = j.at("input_digests").get<std::map<std::string, std::string>>();
    m.output_codes = j.at("output_codes").get<std::vector<std::string>>();
    m.output_digest = j.value("output_digest", "");
    m.tool_version = j.value("tool_version", "");
    m.seconds = j.value("seconds", 0.0);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("manifest: ") + e.what());
  }
  return m;
}

}  // namespace quadrimm
