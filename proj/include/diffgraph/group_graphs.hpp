#pragma once

#include <string>
#include <vector>

#include "diffgraph/graph.hpp"
#include "diffgraph/group.hpp"

namespace diffgraph {

enum class GraphKind { Power, Enhanced, Difference };

inline std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::Power: return "power";
    case GraphKind::Enhanced: return "enhanced";
    case GraphKind::Difference: return "difference";
  }
  return "?";
}

inline GraphKind parse_graph_kind(const std::string& s) {
  if (s == "power") return GraphKind::Power;
  if (s == "enhanced") return GraphKind::Enhanced;
  if (s == "difference") return GraphKind::Difference;
  throw std::invalid_argument("unknown graph kind '" + s + "' (expected power, enhanced or difference)");
}

namespace detail {

// Row x: elements y != x with x in <y> or y in <x>.
inline std::vector<DynamicBitset> power_rows(const GroupTable& G) {
  const auto n = G.order();
  std::vector<DynamicBitset> rows(n, DynamicBitset(n));
  for (Element x = 0; x < n; ++x) {
    auto c = cyclic_closure(G, x);
    c.for_each([&](std::size_t y) {
      if (y != x) {
        rows[x].set(y);
        rows[y].set(x);
      }
    });
  }
  return rows;
}

// Row x: elements y != x sharing a cyclic subgroup with x.
inline std::vector<DynamicBitset> enhanced_rows(const GroupTable& G) {
  const auto n = G.order();
  std::vector<DynamicBitset> rows(n, DynamicBitset(n));
  for (const auto& m : maximal_cyclic_subgroups(G)) {
    m.members.for_each([&](std::size_t x) { rows[x] |= m.members; });
  }
  for (Element x = 0; x < n; ++x) rows[x].reset(x);
  return rows;
}

}  // namespace detail

/// Graph on group elements. Vertex i of the stored graph carries the element
/// index and order in its label; `element_of` maps back.
struct GroupGraph {
  GraphKind kind;
  SimpleGraph graph;
  std::vector<Element> element_of;
};

/// Power or enhanced power graph on all of G (vertex i = element i), or the
/// difference graph with isolated vertices removed.
inline GroupGraph build_group_graph(const GroupTable& G, GraphKind kind) {
  const auto n = G.order();
  std::vector<DynamicBitset> rows;
  if (kind == GraphKind::Power) {
    rows = detail::power_rows(G);
  } else if (kind == GraphKind::Enhanced) {
    rows = detail::enhanced_rows(G);
  } else {
    rows = detail::enhanced_rows(G);
    auto pw = detail::power_rows(G);
    for (Element x = 0; x < n; ++x) {
      DynamicBitset d(n);
      rows[x].for_each([&](std::size_t y) {
        if (!pw[x].test(y)) d.set(y);
      });
      rows[x] = std::move(d);
    }
  }
  std::vector<Element> keep;
  for (Element x = 0; x < n; ++x)
    if (kind != GraphKind::Difference || !rows[x].none()) keep.push_back(x);
  std::vector<std::int64_t> local(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<std::int64_t>(i);
  GroupGraph out{kind, SimpleGraph(keep.size()), keep};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.graph.set_label(static_cast<Vertex>(i), {static_cast<std::int64_t>(keep[i]), G.element_order(keep[i])});
    rows[keep[i]].for_each([&](std::size_t y) {
      if (local[y] > static_cast<std::int64_t>(i)) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(local[y]));
    });
  }
  return out;
}

inline GroupGraph power_graph(const GroupTable& G) { return build_group_graph(G, GraphKind::Power); }
inline GroupGraph enhanced_power_graph(const GroupTable& G) { return build_group_graph(G, GraphKind::Enhanced); }
inline GroupGraph difference_graph(const GroupTable& G) { return build_group_graph(G, GraphKind::Difference); }

struct VertexMembership {
  bool in_vertex_set = false;
  bool identity = false;  // the identity is never a vertex
};

/// Decides whether g is a vertex of D(G) from the cyclic subgroups alone:
/// g is excluded iff <g> is maximal cyclic or every cyclic subgroup
/// containing g has prime-power order. Independent of the adjacency code.
inline VertexMembership vertex_membership(const GroupTable& G, Element g) {
  if (g >= G.order()) throw std::out_of_range("element index " + std::to_string(g) + " out of range");
  if (g == 0) return {false, true};
  const auto subs = cyclic_subgroups(G);
  const auto own = cyclic_closure(G, g);
  bool maximal = true;
  bool all_prime_power = true;
  for (const auto& s : subs) {
    if (!s.contains(g)) continue;
    if (s.order() > own.count()) maximal = false;
    if (!nt::is_prime_power_or_one(s.order())) all_prime_power = false;
  }
  return {!(maximal || all_prime_power), false};
}

}  // namespace diffgraph
