#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "diffgraph/embedding.hpp"
#include "diffgraph/error.hpp"
#include "diffgraph/graph.hpp"
#include "diffgraph/group.hpp"
#include "diffgraph/reduction.hpp"

namespace diffgraph {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

/// Edge-list text: header "n m", m lines "u v", then n label lines
/// "id elementIndex order".
inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << v << " " << g.label(v).element << " " << g.label(v).order << "\n";
  return os.str();
}

/// Parses the edge-list format; the label table is optional. '#' starts a
/// comment line.
inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<long long>> rows;
  std::vector<std::size_t> linenos;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (nums.empty()) continue;
    rows.push_back(std::move(nums));
    linenos.push_back(lineno);
  }
  if (rows.empty() || rows[0].size() != 2 || rows[0][0] < 0 || rows[0][1] < 0)
    throw ParseError("edge list must start with 'n m'");
  const auto n = static_cast<std::size_t>(rows[0][0]);
  const auto m = static_cast<std::size_t>(rows[0][1]);
  if (rows.size() < 1 + m) throw ParseError("edge list declares " + std::to_string(m) + " edges but has fewer lines");
  SimpleGraph g(n);
  for (std::size_t i = 1; i <= m; ++i) {
    const auto& r = rows[i];
    const auto where = "line " + std::to_string(linenos[i]) + ": ";
    if (r.size() != 2) throw ParseError(where + "expected 'u v'");
    if (r[0] < 0 || r[1] < 0 || static_cast<std::size_t>(r[0]) >= n || static_cast<std::size_t>(r[1]) >= n)
      throw ParseError(where + "vertex out of range");
    if (r[0] == r[1]) throw ParseError(where + "loop");
    if (!g.add_edge(static_cast<Vertex>(r[0]), static_cast<Vertex>(r[1]))) throw ParseError(where + "duplicate edge");
  }
  const auto rest = rows.size() - 1 - m;
  if (rest != 0 && rest != n) throw ParseError("label table must have exactly n lines");
  for (std::size_t i = 0; i < rest; ++i) {
    const auto& r = rows[1 + m + i];
    const auto where = "line " + std::to_string(linenos[1 + m + i]) + ": ";
    if (r.size() != 3 || r[0] < 0 || static_cast<std::size_t>(r[0]) >= n || r[2] < 0) throw ParseError(where + "expected 'id element order'");
    g.set_label(static_cast<Vertex>(r[0]), {r[1], static_cast<std::uint32_t>(r[2])});
  }
  return g;
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << g.label(v).element << "\", order=" << g.label(v).order << "];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

struct Certificate {
  Surface surface = Surface::Orientable;
  int genus = 0;
  EmbeddingScheme scheme;
};

inline Json certificate_json(const Certificate& c) {
  Json j;
  j["graph_checksum"] = c.scheme.graph_checksum;
  j["surface"] = to_string(c.surface);
  j["genus"] = c.genus;
  j["rotations"] = c.scheme.rotations;
  Json signs = Json::array();
  for (const auto& e : c.scheme.signs) signs.push_back(Json{{"u", e.u}, {"v", e.v}, {"s", e.s}});
  j["signs"] = signs;
  j["seed"] = c.scheme.seed;
  return j;
}

inline Certificate parse_certificate(const std::string& text) {
  try {
    const auto j = Json::parse(text);
    Certificate c;
    c.scheme.graph_checksum = j.at("graph_checksum").get<std::string>();
    c.surface = parse_surface(j.at("surface").get<std::string>());
    c.genus = j.at("genus").get<int>();
    c.scheme.rotations = j.at("rotations").get<std::vector<std::vector<Vertex>>>();
    for (const auto& e : j.at("signs")) c.scheme.signs.push_back({e.at("u").get<Vertex>(), e.at("v").get<Vertex>(), e.at("s").get<int>()});
    std::sort(c.scheme.signs.begin(), c.scheme.signs.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    if (j.contains("seed")) c.scheme.seed = j.at("seed").get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

inline Json reduction_log_json(const ReductionLog& log) {
  Json arr = Json::array();
  for (const auto& s : log) {
    Json j;
    j["kind"] = to_string(s.kind);
    switch (s.kind) {
      case ReductionKind::RemovedIsolated: j["v"] = s.v; break;
      case ReductionKind::RemovedDegreeOne: j["v"] = s.v; j["neighbor"] = s.a; break;
      case ReductionKind::SuppressedDegreeTwo: j["v"] = s.v; j["a"] = s.a; j["b"] = s.b; break;
      default: j["a"] = s.a; j["b"] = s.b; break;
    }
    arr.push_back(j);
  }
  return arr;
}

/// Reads a group from a Cayley-table file when `arg` names an existing file,
/// otherwise parses it as a descriptor.
inline GroupTable load_group(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return ingest_table(read_file(arg), arg);
  return build_group(arg);
}

}  // namespace diffgraph
