#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "diffgraph/group.hpp"
#include "diffgraph/group_graphs.hpp"
#include "diffgraph/numtheory.hpp"

namespace props {

using namespace diffgraph;

inline std::vector<int> vertex_of(const GroupGraph& gg, std::size_t n) {
  std::vector<int> v(n, -1);
  for (std::size_t i = 0; i < gg.element_of.size(); ++i) v[gg.element_of[i]] = static_cast<int>(i);
  return v;
}

/// Structural statements about D(G) for a nilpotent G, checked directly.
/// Returns one message per violation.
inline std::vector<std::string> structural_violations(const GroupTable& G) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(G.source() + ": " + what); };
  const auto n = G.order();
  const auto D = difference_graph(G);
  const auto P = power_graph(G);
  const auto E = enhanced_power_graph(G);
  const auto vx = vertex_of(D, n);
  auto adj = [&](Element x, Element y) { return vx[x] >= 0 && vx[y] >= 0 && D.graph.has_edge(vx[x], vx[y]); };

  // Edge sets: power within enhanced, difference = enhanced minus power.
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      const bool p = P.graph.has_edge(x, y), e = E.graph.has_edge(x, y);
      if (p && !e) fail("power edge missing from enhanced graph");
      if (adj(x, y) != (e && !p)) fail("difference edge set mismatch at " + std::to_string(x) + "," + std::to_string(y));
    }

  // Vertex predicate from cyclic subgroups alone.
  for (Element g = 1; g < n; ++g)
    if (vertex_membership(G, g).in_vertex_set != (vx[g] >= 0)) fail("vertex predicate differs at element " + std::to_string(g));
  if (vx[0] >= 0) fail("identity is a vertex");

  const bool pgroup = G.order() == 1 || is_p_group(G);
  if (pgroup && D.graph.vertex_count() != 0) fail("p-group with nonempty difference graph");
  if (pgroup) return bad;

  const auto S = sylow_decomposition(G);
  std::vector<std::size_t> comp_of(n, S.primes.size());
  for (std::size_t i = 0; i < S.primes.size(); ++i) S.components[i].members.for_each([&](std::size_t g) { comp_of[g] = i; });

  for (Element x = 1; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      const auto ox = G.element_order(x), oy = G.element_order(y);
      if (std::gcd(ox, oy) == 1 && !adj(x, y)) fail("coprime orders not adjacent");
      if (comp_of[x] == comp_of[y] && comp_of[x] < S.primes.size() && adj(x, y)) fail("adjacent elements inside one Sylow subgroup");
      if (ox % oy != 0 && oy % ox != 0 && E.graph.has_edge(x, y) && !adj(x, y)) fail("incomparable orders in a cyclic subgroup not adjacent");
    }

  // Union of the Sylow subgroups minus e induces a complete multipartite graph.
  std::vector<Vertex> sylow_vertices;
  std::vector<std::size_t> expect_parts;
  for (std::size_t i = 0; i < S.primes.size(); ++i) {
    expect_parts.push_back(S.components[i].order() - 1);
    S.components[i].members.for_each([&](std::size_t g) {
      if (g != 0) {
        if (vx[g] < 0)
          fail("Sylow element missing from the vertex set");
        else
          sylow_vertices.push_back(static_cast<Vertex>(vx[g]));
      }
    });
  }
  std::sort(expect_parts.begin(), expect_parts.end());
  const auto parts = complete_multipartite_parts(induced_subgraph(D.graph, sylow_vertices));
  if (!parts || *parts != expect_parts) fail("Sylow union is not the expected complete multipartite graph");

  // Two Sylow subgroups of prime exponent: the whole graph is K_{|P1|-1,|P2|-1}.
  if (S.primes.size() == 2) {
    bool prime_exp = true;
    for (std::size_t i = 0; i < 2; ++i)
      prime_exp = prime_exp && exponent(subgroup_table(G, S.components[i].members)) == S.primes[i];
    if (prime_exp) {
      const auto whole = complete_multipartite_parts(D.graph);
      if (!whole || *whole != expect_parts || D.graph.vertex_count() != expect_parts[0] + expect_parts[1])
        fail("prime-exponent product is not the expected complete bipartite graph");
    }
  }

  // Every pair of realized orders has an element of order lcm.
  std::set<std::uint32_t> realized(G.orders().begin(), G.orders().end());
  for (auto s : realized)
    for (auto t : realized)
      if (G.element_order(lcm_witness(G, s, t)) != std::lcm(s, t)) fail("lcm witness has the wrong order");
  return bad;
}

}  // namespace props
