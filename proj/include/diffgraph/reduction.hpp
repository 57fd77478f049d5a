#pragma once

#include <set>
#include <string>
#include <vector>

#include "diffgraph/graph.hpp"

namespace diffgraph {

enum class ReductionKind { RemovedIsolated, RemovedDegreeOne, SuppressedDegreeTwo, DroppedParallel, DroppedLoop, SplitComponent, SplitBlock };

inline std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::RemovedIsolated: return "removedIsolated";
    case ReductionKind::RemovedDegreeOne: return "removedDegreeOne";
    case ReductionKind::SuppressedDegreeTwo: return "suppressedDegreeTwo";
    case ReductionKind::DroppedParallel: return "droppedParallel";
    case ReductionKind::DroppedLoop: return "droppedLoop";
    case ReductionKind::SplitComponent: return "splitComponent";
    case ReductionKind::SplitBlock: return "splitBlock";
  }
  return "?";
}

/// One logged step. Vertex ids refer to the input graph.
/// removedDegreeOne: v, a = its neighbour. suppressedDegreeTwo: v, a, b.
/// droppedParallel: a, b (follows the suppression that produced it).
struct ReductionStep {
  ReductionKind kind;
  Vertex v = 0;
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

using ReductionLog = std::vector<ReductionStep>;

struct Reduction {
  SimpleGraph graph;                  // compacted result
  std::vector<Vertex> original_of;    // result vertex -> input vertex
  ReductionLog log;
};

namespace detail {

inline Reduction compact(const SimpleGraph& input, const std::vector<std::set<Vertex>>& adj, const std::vector<char>& alive,
                         ReductionLog log) {
  Reduction r;
  std::vector<std::int64_t> local(adj.size(), -1);
  for (Vertex v = 0; v < adj.size(); ++v)
    if (alive[v]) {
      local[v] = static_cast<std::int64_t>(r.original_of.size());
      r.original_of.push_back(v);
    }
  r.graph = SimpleGraph(r.original_of.size());
  for (std::size_t i = 0; i < r.original_of.size(); ++i) {
    r.graph.set_label(static_cast<Vertex>(i), input.label(r.original_of[i]));
    for (Vertex w : adj[r.original_of[i]])
      if (local[w] > static_cast<std::int64_t>(i)) r.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
  }
  r.log = std::move(log);
  return r;
}

}  // namespace detail

/// Strips vertices of degree <= 1 and suppresses degree-2 vertices until every
/// remaining vertex has degree >= 3. A suppression whose endpoints are already
/// adjacent drops the resulting parallel edge. Always processes the smallest
/// eligible vertex, so the result is deterministic. Genus and cross-cap are
/// preserved.
inline Reduction reduce_homeomorphic(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(n, 1);
  std::set<Vertex> low;
  for (Vertex v = 0; v < n; ++v)
    if (adj[v].size() <= 2) low.insert(v);
  ReductionLog log;
  auto touch = [&](Vertex v) {
    if (alive[v] && adj[v].size() <= 2) low.insert(v);
  };
  while (!low.empty()) {
    const Vertex v = *low.begin();
    low.erase(low.begin());
    if (!alive[v] || adj[v].size() > 2) continue;
    alive[v] = 0;
    if (adj[v].empty()) {
      log.push_back({ReductionKind::RemovedIsolated, v});
    } else if (adj[v].size() == 1) {
      const Vertex a = *adj[v].begin();
      adj[a].erase(v);
      adj[v].clear();
      log.push_back({ReductionKind::RemovedDegreeOne, v, a});
      touch(a);
    } else {
      const Vertex a = *adj[v].begin();
      const Vertex b = *std::next(adj[v].begin());
      adj[a].erase(v);
      adj[b].erase(v);
      adj[v].clear();
      log.push_back({ReductionKind::SuppressedDegreeTwo, v, a, b});
      if (adj[a].count(b)) {
        log.push_back({ReductionKind::DroppedParallel, 0, a, b});
      } else {
        adj[a].insert(b);
        adj[b].insert(a);
      }
      touch(a);
      touch(b);
    }
  }
  return detail::compact(g, adj, alive, std::move(log));
}

/// Re-applies a log to the input graph; used to check that a log reproduces
/// its reduction.
inline Reduction replay_reduction(const SimpleGraph& g, const ReductionLog& log) {
  const auto n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(n, 1);
  auto fail = [](const std::string& why) { throw std::invalid_argument("log does not replay: " + why); };
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto& s = log[i];
    switch (s.kind) {
      case ReductionKind::RemovedIsolated:
        if (s.v >= n || !alive[s.v] || !adj[s.v].empty()) fail("vertex " + std::to_string(s.v) + " is not isolated");
        alive[s.v] = 0;
        break;
      case ReductionKind::RemovedDegreeOne:
        if (s.v >= n || !alive[s.v] || adj[s.v] != std::set<Vertex>{s.a}) fail("vertex " + std::to_string(s.v) + " is not a leaf");
        adj[s.a].erase(s.v);
        adj[s.v].clear();
        alive[s.v] = 0;
        break;
      case ReductionKind::SuppressedDegreeTwo: {
        if (s.v >= n || !alive[s.v] || adj[s.v] != std::set<Vertex>{s.a, s.b})
          fail("vertex " + std::to_string(s.v) + " does not have degree 2");
        adj[s.a].erase(s.v);
        adj[s.b].erase(s.v);
        adj[s.v].clear();
        alive[s.v] = 0;
        const bool parallel = i + 1 < log.size() && log[i + 1].kind == ReductionKind::DroppedParallel;
        if (parallel != static_cast<bool>(adj[s.a].count(s.b))) fail("parallel-edge record mismatch");
        if (!parallel) {
          adj[s.a].insert(s.b);
          adj[s.b].insert(s.a);
        }
        break;
      }
      case ReductionKind::DroppedParallel:
        if (i == 0 || log[i - 1].kind != ReductionKind::SuppressedDegreeTwo) fail("orphan parallel-edge record");
        break;
      default:
        break;
    }
  }
  return detail::compact(g, adj, alive, log);
}

}  // namespace diffgraph
