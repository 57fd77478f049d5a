#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// embedding code: faces are traced by a separate, deliberately naive routine.

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "diffgraph/graph.hpp"

namespace oracle {

using diffgraph::SimpleGraph;
using diffgraph::Vertex;

struct Naive {
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, int> sign;

  explicit Naive(const SimpleGraph& g) {
    nb.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) nb[v] = g.neighbors(v);
    edges = g.edges();
  }

  // Face count: walk (u -> v, flag) states; each face yields two orbits.
  int faces(const std::vector<std::vector<Vertex>>& rot) const {
    std::map<std::tuple<Vertex, Vertex, int>, bool> seen;
    int orbits = 0;
    for (Vertex u = 0; u < rot.size(); ++u)
      for (Vertex v : rot[u])
        for (int f : {1, -1}) {
          if (seen[{u, v, f}]) continue;
          ++orbits;
          Vertex a = u, b = v;
          int fl = f;
          while (!seen[{a, b, fl}]) {
            seen[{a, b, fl}] = true;
            auto it = sign.find({std::min(a, b), std::max(a, b)});
            const int s = it == sign.end() ? 1 : it->second;
            fl *= s;
            const auto& r = rot[b];
            const auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), a) - r.begin());
            const Vertex c = fl > 0 ? r[(pos + 1) % r.size()] : r[(pos + r.size() - 1) % r.size()];
            a = b;
            b = c;
          }
        }
    return orbits / 2;
  }

  int euler_genus(const std::vector<std::vector<Vertex>>& rot) const {
    int isolated = 0;
    for (const auto& r : rot) isolated += r.empty();
    return 2 - static_cast<int>(rot.size()) + static_cast<int>(edges.size()) - (faces(rot) + isolated);
  }

  // Calls f on every rotation system (first neighbour of each vertex fixed).
  template <class F>
  void for_each_rotation(F&& f) const {
    auto rot = nb;
    const auto n = rot.size();
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == n) {
        f(rot);
        return;
      }
      auto& r = rot[v];
      if (r.size() <= 2) {
        rec(v + 1);
        return;
      }
      std::sort(r.begin() + 1, r.end());
      do rec(v + 1);
      while (std::next_permutation(r.begin() + 1, r.end()));
    };
    rec(0);
  }
};

inline double rotation_count(const SimpleGraph& g) {
  double c = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t k = 2; k < g.degree(v); ++k) c *= static_cast<double>(k);
  return c;
}

/// Orientable genus of a connected graph by trying every rotation system.
inline int brute_force_genus(const SimpleGraph& g) {
  Naive nv(g);
  int best = INT_MAX;
  nv.for_each_rotation([&](const auto& rot) { best = std::min(best, nv.euler_genus(rot)); });
  return best / 2;
}

/// Cross-cap of a connected graph: 0 when planar, otherwise the least Euler
/// genus over rotation systems with edge signs (spanning tree fixed +1) that
/// are not switching-equivalent to all-positive.
inline int brute_force_crosscap(const SimpleGraph& g) {
  if (brute_force_genus(g) == 0) return 0;
  Naive nv(g);
  // BFS tree.
  std::vector<char> vis(g.vertex_count(), 0);
  std::vector<Vertex> q{0};
  vis[0] = 1;
  std::vector<std::pair<Vertex, Vertex>> cotree;
  std::map<std::pair<Vertex, Vertex>, bool> tree;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (Vertex w : g.neighbors(q[i]))
      if (!vis[w]) {
        vis[w] = 1;
        tree[{std::min(q[i], w), std::max(q[i], w)}] = true;
        q.push_back(w);
      }
  for (auto e : nv.edges)
    if (!tree.count(e)) cotree.push_back(e);
  int best = INT_MAX;
  // With tree signs +1, a scheme is orientable iff every cotree sign is +1.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cotree.size()); ++mask) {
    nv.sign.clear();
    for (std::size_t i = 0; i < cotree.size(); ++i)
      if (mask >> i & 1U) nv.sign[cotree[i]] = -1;
    nv.for_each_rotation([&](const auto& rot) { best = std::min(best, nv.euler_genus(rot)); });
  }
  return best;
}

/// Deterministic corpus of connected graphs on 3..max_n vertices whose
/// rotation-system count stays within `cap`, so brute force is feasible.
inline std::vector<SimpleGraph> random_corpus(std::size_t count, std::size_t max_n = 8, double cap = 5e4,
                                              std::uint64_t seed = 20241016) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.3, 0.8)(rng);
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (!diffgraph::is_connected(g) || rotation_count(g) > cap) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// Every subset of size k of {0..n-1}, lexicographic.
inline std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Brute-force K_{m,n} containment.
inline bool has_biclique(const SimpleGraph& g, std::size_t m, std::size_t n) {
  for (const auto& a : subsets(g.vertex_count(), m)) {
    std::size_t common = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(a.begin(), a.end(), v) != a.end()) continue;
      bool all = true;
      for (Vertex x : a) all = all && g.has_edge(x, v);
      common += all;
    }
    if (common >= n) return true;
  }
  return false;
}

/// Shortest cycle by trying every cyclic vertex sequence (n <= 8).
inline std::optional<std::size_t> brute_force_girth(const SimpleGraph& g, bool& has_odd) {
  has_odd = false;
  std::optional<std::size_t> best;
  const auto n = g.vertex_count();
  for (std::size_t len = 3; len <= n; ++len)
    for (const auto& s : subsets(n, len)) {
      auto perm = s;
      do {
        bool cyc = true;
        for (std::size_t i = 0; i < len && cyc; ++i) cyc = g.has_edge(perm[i], perm[(i + 1) % len]);
        if (cyc) {
          if (!best) best = len;
          if (len % 2) has_odd = true;
          break;
        }
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  return best;
}

}  // namespace oracle
