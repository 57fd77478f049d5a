#pragma once

#include <optional>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "diffgraph/embedding.hpp"
#include "diffgraph/graph.hpp"

namespace diffgraph {

struct PlanarityResult {
  bool planar = false;
  std::optional<EmbeddingScheme> embedding;  // genus-0 scheme when planar
  std::vector<Edge> kuratowski_edges;        // K5 / K3,3 subdivision otherwise
};

/// Boyer-Myrvold planarity test. The returned embedding is re-traced and
/// must have Euler genus 0.
inline PlanarityResult is_planar(const SimpleGraph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
  const auto n = g.vertex_count();
  BGraph bg(n);
  int idx = 0;
  for (auto [u, v] : g.edges()) {
    auto e = boost::add_edge(u, v, bg).first;
    boost::put(boost::edge_index, bg, e, idx++);
  }
  PlanarityResult out;
  std::vector<std::vector<BEdge>> emb(n);
  auto emb_map = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
  std::vector<BEdge> kur;
  out.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                   boost::boyer_myrvold_params::embedding = emb_map,
                                                   boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
  if (out.planar) {
    std::vector<std::vector<Vertex>> rotations(n);
    for (Vertex v = 0; v < n; ++v)
      for (const auto& e : emb[v]) {
        const auto a = static_cast<Vertex>(boost::source(e, bg));
        const auto b = static_cast<Vertex>(boost::target(e, bg));
        rotations[v].push_back(a == v ? b : a);
      }
    auto s = orientable_scheme(g, std::move(rotations));
    if (trace_faces(g, s).euler_genus != 0) throw std::logic_error("planar embedding failed face-trace check");
    out.embedding = std::move(s);
  } else {
    for (const auto& e : kur) {
      auto a = static_cast<Vertex>(boost::source(e, bg));
      auto b = static_cast<Vertex>(boost::target(e, bg));
      out.kuratowski_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.kuratowski_edges.begin(), out.kuratowski_edges.end());
  }
  return out;
}

}  // namespace diffgraph
