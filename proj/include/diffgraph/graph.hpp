#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diffgraph/bitset.hpp"
#include "diffgraph/error.hpp"

namespace diffgraph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Opaque per-vertex label. Graphs built from groups store the element index
/// and its order; generic graphs use element = vertex id and order = 0.
struct VertexLabel {
  std::int64_t element = -1;
  std::uint32_t order = 0;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Undirected simple graph with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n), labels_(n) {
    for (std::size_t v = 0; v < n; ++v) labels_[v].element = static_cast<std::int64_t>(v);
  }

  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// Adds {u,v}; loops are rejected and duplicates ignored. Returns true when
  /// the edge is new.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) return false;
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edges_;
    return true;
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  const VertexLabel& label(Vertex v) const { return labels_[v]; }
  void set_label(Vertex v, VertexLabel l) { labels_[v] = l; }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<DynamicBitset> adjacency_bitsets() const {
    std::vector<DynamicBitset> rows(adj_.size(), DynamicBitset(adj_.size()));
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u]) rows[u].set(v);
    return rows;
  }

  /// Structural equality (labels ignored).
  bool same_edges(const SimpleGraph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexLabel> labels_;
  std::size_t edges_ = 0;
};

inline SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Complete multipartite graph; parts occupy consecutive vertex ranges.
inline SimpleGraph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  SimpleGraph g(n);
  std::vector<std::size_t> part_of(n);
  std::size_t at = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t k = 0; k < parts[i]; ++k) part_of[at++] = i;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline SimpleGraph complete_bipartite(std::size_t m, std::size_t n) { return complete_multipartite({m, n}); }

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

/// FNV-1a over the vertex count and sorted edge list, as 16 hex digits.
inline std::string graph_checksum(const SimpleGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

/// Subgraph induced by `vs`; vertex i of the result is the i-th smallest
/// member of vs. Labels carry over.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::int64_t> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(vs[i]));
    local[vs[i]] = static_cast<std::int64_t>(i);
  }
  SimpleGraph h(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    h.set_label(static_cast<Vertex>(i), g.label(vs[i]));
    for (Vertex w : g.neighbors(vs[i]))
      if (local[w] > static_cast<std::int64_t>(i)) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
  }
  return h;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

/// Sorted part sizes when g is complete multipartite (its complement is a
/// disjoint union of cliques), nullopt otherwise.
inline std::optional<std::vector<std::size_t>> complete_multipartite_parts(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::int64_t> comp(n, -1);
  std::vector<std::size_t> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const auto id = static_cast<std::int64_t>(sizes.size());
    std::vector<Vertex> stack{s};
    comp[s] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w = 0; w < n; ++w)
        if (w != u && comp[w] < 0 && !g.has_edge(u, w)) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    sizes.push_back(size);
  }
  // Each complement component must be independent in g, and every cross pair adjacent.
  std::size_t expected = n * (n - (n ? 1 : 0)) / 2;
  for (auto s : sizes) expected -= s * (s - 1) / 2;
  if (expected != g.edge_count()) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (comp[u] == comp[v]) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct BicliqueWitness {
  std::vector<Vertex> left;   // |left| = m
  std::vector<Vertex> right;  // |right| = n
};

namespace detail {

// Enumerates m-subsets of `cand` in lexicographic order, passing the running
// common neighbourhood; f returns false to stop.
template <typename F>
void for_each_subset_common(const std::vector<Vertex>& cand, const std::vector<DynamicBitset>& rows, std::size_t m,
                            std::size_t need, F&& f) {
  std::vector<Vertex> chosen;
  bool stop = false;
  std::function<void(std::size_t, const DynamicBitset&)> rec = [&](std::size_t start, const DynamicBitset& common) {
    if (stop) return;
    if (chosen.size() == m) {
      if (!f(chosen, common)) stop = true;
      return;
    }
    for (std::size_t i = start; i + (m - chosen.size()) <= cand.size() && !stop; ++i) {
      DynamicBitset next = chosen.empty() ? rows[cand[i]] : (common & rows[cand[i]]);
      if (next.count() < need) continue;
      chosen.push_back(cand[i]);
      rec(i + 1, next);
      chosen.pop_back();
    }
  };
  rec(0, DynamicBitset(rows.empty() ? 0 : rows.front().size()));
}

}  // namespace detail

inline constexpr std::size_t kBicliqueSideCap = 4;

/// Finds disjoint A (|A| = m) and B (|B| = n) with every A x B edge present.
/// Deterministic: the lexicographically first A whose common neighbourhood
/// has at least n vertices, and the n smallest of those as B.
inline std::optional<BicliqueWitness> find_complete_bipartite(const SimpleGraph& g, std::size_t m, std::size_t n) {
  if (m > kBicliqueSideCap) throw CapExceeded("complete bipartite search supports m <= 4");
  if (m == 0 || n == 0) return BicliqueWitness{};
  auto rows = g.adjacency_bitsets();
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= n) cand.push_back(v);
  std::optional<BicliqueWitness> found;
  detail::for_each_subset_common(cand, rows, m, n, [&](const std::vector<Vertex>& a, const DynamicBitset& common) {
    BicliqueWitness w;
    w.left = a;
    common.for_each([&](std::size_t v) {
      if (w.right.size() < n) w.right.push_back(static_cast<Vertex>(v));
    });
    found = std::move(w);
    return false;
  });
  return found;
}

/// Largest n such that K_{m,n} is a subgraph (0 when none), with a witness.
inline std::pair<std::size_t, std::optional<BicliqueWitness>> max_complete_bipartite(const SimpleGraph& g, std::size_t m) {
  if (m > kBicliqueSideCap) throw CapExceeded("complete bipartite search supports m <= 4");
  auto rows = g.adjacency_bitsets();
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 1) cand.push_back(v);
  std::size_t best = 0;
  std::optional<BicliqueWitness> witness;
  // The search threshold rises as better witnesses appear.
  std::function<void(std::size_t, std::vector<Vertex>&, const DynamicBitset*)> rec =
      [&](std::size_t start, std::vector<Vertex>& chosen, const DynamicBitset* common) {
        if (chosen.size() == m) {
          const auto c = common->count();
          if (c > best) {
            best = c;
            BicliqueWitness w;
            w.left = chosen;
            common->for_each([&](std::size_t v) { w.right.push_back(static_cast<Vertex>(v)); });
            witness = std::move(w);
          }
          return;
        }
        for (std::size_t i = start; i + (m - chosen.size()) <= cand.size(); ++i) {
          if (g.degree(cand[i]) <= best) continue;
          DynamicBitset next = common ? (*common & rows[cand[i]]) : rows[cand[i]];
          if (next.count() <= best) continue;
          chosen.push_back(cand[i]);
          rec(i + 1, chosen, &next);
          chosen.pop_back();
        }
      };
  std::vector<Vertex> chosen;
  if (m > 0) rec(0, chosen, nullptr);
  return {best, witness};
}

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
  /// Vertex sets of the blocks (2-connected pieces and bridges), each sorted.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};

/// Biconnected components by the edge-stack DFS. Isolated vertices belong to
/// no block.
inline BlockDecomposition block_decomposition(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  BlockDecomposition out;
  std::vector<std::int64_t> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> estack;
  std::int64_t timer = 0;

  struct Frame {
    Vertex v;
    std::int64_t parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    std::size_t root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, static_cast<std::int64_t>(f.v), 0});
        } else if (static_cast<std::int64_t>(w) != f.parent && disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const std::int64_t parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      const auto p = static_cast<Vertex>(parent);
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = 1;
        std::vector<Vertex> block;
        while (true) {
          auto [a, b] = estack.back();
          estack.pop_back();
          block.push_back(a);
          block.push_back(b);
          if ((a == p && b == v) || (a == v && b == p)) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

/// Girth (nullopt when acyclic) and bipartiteness.
struct GirthInfo {
  std::optional<std::size_t> girth;
  bool bipartite = true;
};

inline GirthInfo girth_and_bipartite(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  GirthInfo info;
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> q{s};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (Vertex w : g.neighbors(q[i])) {
        if (color[w] < 0) {
          color[w] = 1 - color[q[i]];
          q.push_back(w);
        } else if (color[w] == color[q[i]]) {
          info.bipartite = false;
        }
      }
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::int64_t> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<Vertex> q{s};
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Vertex u = q[i];
      if (2 * static_cast<std::size_t>(dist[u]) + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (parent[u] != static_cast<std::int64_t>(w)) {
          best = std::min(best, static_cast<std::size_t>(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  if (best != std::numeric_limits<std::size_t>::max()) info.girth = best;
  return info;
}

/// Vertices of the 2-core (iteratively strip degree <= 1), sorted.
inline std::vector<Vertex> two_core(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) q.push_back(v);
  }
  while (!q.empty()) {
    Vertex v = q.back();
    q.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && --deg[w] <= 1) q.push_back(w);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

}  // namespace diffgraph
