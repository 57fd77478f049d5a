#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "diffgraph/error.hpp"
#include "diffgraph/graph.hpp"

namespace diffgraph {

enum class Surface { Orientable, Nonorientable };

inline std::string to_string(Surface s) { return s == Surface::Orientable ? "orientable" : "nonorientable"; }

inline Surface parse_surface(const std::string& s) {
  if (s == "o" || s == "orientable") return Surface::Orientable;
  if (s == "n" || s == "nonorientable") return Surface::Nonorientable;
  throw std::invalid_argument("unknown surface '" + s + "' (expected o or n)");
}

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  int s = 1;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Rotation system with edge signs. signs lists every edge once with u < v,
/// sorted.
struct EmbeddingScheme {
  std::vector<std::vector<Vertex>> rotations;
  std::vector<SignedEdge> signs;
  std::string graph_checksum;
  std::uint64_t seed = 0;

  int sign(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(signs.begin(), signs.end(), SignedEdge{a, b, 0},
                               [](const SignedEdge& x, const SignedEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    if (it == signs.end() || it->u != a || it->v != b) throw SchemeMismatch("no sign for edge " + std::to_string(a) + "-" + std::to_string(b));
    return it->s;
  }
};

/// Scheme with the given rotations and every sign +1.
inline EmbeddingScheme orientable_scheme(const SimpleGraph& g, std::vector<std::vector<Vertex>> rotations) {
  EmbeddingScheme s;
  s.rotations = std::move(rotations);
  for (auto [u, v] : g.edges()) s.signs.push_back({u, v, 1});
  s.graph_checksum = graph_checksum(g);
  return s;
}

namespace detail {

/// Dart numbering: dart offset[v] + k runs from v to the k-th smallest
/// neighbour of v.
struct DartIndex {
  std::vector<std::size_t> offset;
  std::vector<Vertex> head;
  std::vector<Vertex> tail;
  std::vector<std::size_t> rev;
  std::vector<std::size_t> edge;
  std::vector<Edge> edges;

  explicit DartIndex(const SimpleGraph& g) {
    const auto n = g.vertex_count();
    offset.resize(n + 1);
    for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
    head.resize(offset[n]);
    tail.resize(offset[n]);
    rev.resize(offset[n]);
    edge.resize(offset[n]);
    edges = g.edges();
    for (Vertex v = 0; v < n; ++v) {
      const auto& nb = g.neighbors(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const auto d = offset[v] + k;
        tail[d] = v;
        head[d] = nb[k];
        const auto& nu = g.neighbors(nb[k]);
        rev[d] = offset[nb[k]] + static_cast<std::size_t>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin());
        const Edge e{std::min(v, nb[k]), std::max(v, nb[k])};
        edge[d] = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
      }
    }
  }
  std::size_t darts() const { return head.size(); }
  std::size_t slot(const SimpleGraph& g, Vertex v, Vertex w) const {
    const auto& nb = g.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), w);
    if (it == nb.end() || *it != w) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - nb.begin());
  }
};

/// Face-tracing kernel over 4E states (dart, direction). rot[v][i] is the
/// dart of the i-th rotation entry of v; rpos[d] is the rotation position of
/// dart d at its tail; sign[e] is +1/-1 per edge. Returns orbit lengths.
inline std::vector<std::size_t> trace_orbits(const DartIndex& ix, const std::vector<std::vector<std::size_t>>& rot,
                                             const std::vector<std::size_t>& rpos, const std::vector<int>& sign) {
  const auto D = ix.darts();
  std::vector<char> seen(2 * D, 0);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < 2 * D; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    std::size_t st = start;
    while (!seen[st]) {
      seen[st] = 1;
      ++len;
      const std::size_t d = st >> 1;
      int dir = (st & 1) ? -1 : 1;
      dir *= sign[ix.edge[d]];
      const std::size_t r = ix.rev[d];
      const Vertex u = ix.tail[r];
      const auto deg = rot[u].size();
      const std::size_t j = dir > 0 ? (rpos[r] + 1) % deg : (rpos[r] + deg - 1) % deg;
      st = (rot[u][j] << 1) | (dir < 0 ? 1U : 0U);
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace detail

struct FaceTrace {
  std::size_t faces = 0;
  std::vector<std::size_t> face_lengths;  // sorted
  int euler_genus = 0;
  bool orientable = true;
};

/// Throws SchemeMismatch unless s is a well-formed scheme for g.
inline void check_scheme(const SimpleGraph& g, const EmbeddingScheme& s) {
  if (!s.graph_checksum.empty() && s.graph_checksum != graph_checksum(g))
    throw SchemeMismatch("scheme checksum " + s.graph_checksum + " does not match graph " + graph_checksum(g));
  if (s.rotations.size() != g.vertex_count())
    throw SchemeMismatch("scheme has " + std::to_string(s.rotations.size()) + " rotations for " +
                         std::to_string(g.vertex_count()) + " vertices");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = s.rotations[v];
    std::sort(r.begin(), r.end());
    if (r != g.neighbors(v)) throw SchemeMismatch("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
  }
  const auto edges = g.edges();
  if (s.signs.size() != edges.size()) throw SchemeMismatch("signs do not cover the edge set");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = s.signs[i];
    if (e.u != edges[i].first || e.v != edges[i].second) throw SchemeMismatch("signs do not cover the edge set");
    if (e.s != 1 && e.s != -1) throw SchemeMismatch("edge sign must be +1 or -1");
  }
}

/// Orientable iff some vertex switching makes every sign +1, i.e. every
/// cycle carries an even number of negative edges.
inline bool scheme_orientable(const SimpleGraph& g, const EmbeddingScheme& s) {
  std::vector<int> color(g.vertex_count(), -1);
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (color[r] >= 0) continue;
    color[r] = 0;
    std::vector<Vertex> q{r};
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Vertex u = q[i];
      for (Vertex w : g.neighbors(u)) {
        const int want = color[u] ^ (s.sign(u, w) < 0 ? 1 : 0);
        if (color[w] < 0) {
          color[w] = want;
          q.push_back(w);
        } else if (color[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Traces all faces. Euler genus is 2c - V + E - F over c components, where
/// an isolated vertex contributes one face.
inline FaceTrace trace_faces(const SimpleGraph& g, const EmbeddingScheme& s) {
  check_scheme(g, s);
  detail::DartIndex ix(g);
  std::vector<std::vector<std::size_t>> rot(g.vertex_count());
  std::vector<std::size_t> rpos(ix.darts());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = 0; i < s.rotations[v].size(); ++i) {
      const auto d = ix.offset[v] + ix.slot(g, v, s.rotations[v][i]);
      rot[v].push_back(d);
      rpos[d] = i;
    }
  std::vector<int> sign(ix.edges.size());
  for (std::size_t i = 0; i < sign.size(); ++i) sign[i] = s.signs[i].s;
  auto orbits = detail::trace_orbits(ix, rot, rpos, sign);
  std::sort(orbits.begin(), orbits.end());
  FaceTrace t;
  for (std::size_t i = 0; i < orbits.size(); i += 2) t.face_lengths.push_back(orbits[i]);
  t.faces = orbits.size() / 2;
  std::size_t isolated = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
  const auto c = static_cast<long long>(connected_components(g).size());
  t.faces += isolated;
  t.euler_genus = static_cast<int>(2 * c - static_cast<long long>(g.vertex_count()) + static_cast<long long>(g.edge_count()) -
                                   static_cast<long long>(t.faces));
  t.orientable = scheme_orientable(g, s);
  return t;
}

/// Genus of the surface the scheme realises: euler_genus / 2 when orientable,
/// euler_genus otherwise.
inline int scheme_genus(const FaceTrace& t) { return t.orientable ? t.euler_genus / 2 : t.euler_genus; }

/// True iff the scheme embeds g in the claimed surface. A genus-0 claim is
/// accepted for either surface type when the scheme is planar. Throws
/// SchemeMismatch when the scheme does not belong to g.
inline bool verify_certificate(const SimpleGraph& g, const EmbeddingScheme& s, Surface surface, int genus) {
  const auto t = trace_faces(g, s);
  if (genus == 0) return t.euler_genus == 0;
  if (surface == Surface::Orientable) return t.orientable && t.euler_genus == 2 * genus;
  return !t.orientable && t.euler_genus == genus;
}

/// Vertex switching so that the edges of a BFS spanning forest carry +1.
/// Switching reverses the rotation at a vertex and flips its incident signs,
/// which leaves the faces unchanged.
inline EmbeddingScheme normalize_signs(const SimpleGraph& g, EmbeddingScheme s) {
  check_scheme(g, s);
  std::vector<int> flip(g.vertex_count(), -1);
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (flip[r] >= 0) continue;
    flip[r] = 0;
    std::vector<Vertex> q{r};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (Vertex w : g.neighbors(q[i]))
        if (flip[w] < 0) {
          flip[w] = flip[q[i]] ^ (s.sign(q[i], w) < 0 ? 1 : 0);
          q.push_back(w);
        }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (flip[v]) std::reverse(s.rotations[v].begin(), s.rotations[v].end());
  for (auto& e : s.signs)
    if (flip[e.u] ^ flip[e.v]) e.s = -e.s;
  return s;
}

/// Turns an orientable scheme into a nonorientable one of Euler genus at most
/// one more, by flipping the sign of a single edge. Returns the best such
/// flip, or nullopt when g is a forest.
inline std::optional<EmbeddingScheme> add_crosscap(const SimpleGraph& g, const EmbeddingScheme& s) {
  std::optional<EmbeddingScheme> best;
  int best_eg = 0;
  for (std::size_t i = 0; i < s.signs.size(); ++i) {
    EmbeddingScheme t = s;
    t.signs[i].s = -t.signs[i].s;
    const auto tr = trace_faces(g, t);
    if (tr.orientable) continue;
    if (!best || tr.euler_genus < best_eg) {
      best = std::move(t);
      best_eg = tr.euler_genus;
    }
  }
  return best;
}

}  // namespace diffgraph
