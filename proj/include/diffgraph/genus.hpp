#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffgraph/bounds.hpp"
#include "diffgraph/embedding.hpp"
#include "diffgraph/graph.hpp"
#include "diffgraph/planarity.hpp"
#include "diffgraph/reduction.hpp"
#include "diffgraph/search.hpp"

namespace diffgraph {

/// One bound and where it came from. kind is one of formula, euler,
/// subgraph(m,n), planarity, search, exhaustive, additivity.
struct BoundSource {
  std::string kind;
  std::string detail;
  int value = 0;
  bool upper = false;
};

struct GenusResult {
  Surface surface = Surface::Orientable;
  int lower = 0;
  std::optional<int> upper;
  bool exact = false;
  std::optional<EmbeddingScheme> certificate;
  std::vector<BoundSource> provenance;

  int value() const {
    if (!exact) throw std::logic_error("genus result is not exact");
    return lower;
  }
  void raise_lower(int v, BoundSource src) {
    src.upper = false;
    src.value = v;
    provenance.push_back(std::move(src));
    lower = std::max(lower, v);
  }
  void offer_upper(int v, EmbeddingScheme cert, BoundSource src) {
    if (upper && *upper <= v) return;
    src.upper = true;
    src.value = v;
    provenance.push_back(std::move(src));
    upper = v;
    certificate = std::move(cert);
  }
  void settle() { exact = upper && *upper == lower; }
};

struct GenusOptions {
  SearchBudget search;
  /// Skip the upper-bound search once the lower bound reaches this value.
  int skip_search_at = INT_MAX;
};

namespace detail {

inline EmbeddingScheme empty_scheme(const SimpleGraph& g) {
  return orientable_scheme(g, std::vector<std::vector<Vertex>>(g.vertex_count()));
}

inline int genus_from_scheme(const SimpleGraph& g, const EmbeddingScheme& s, Surface surface) {
  const auto t = trace_faces(g, s);
  return surface == Surface::Orientable ? t.euler_genus / 2 : t.euler_genus;
}

inline void add_lower_bounds(const SimpleGraph& g, Surface surface, GenusResult& r, const std::string& where) {
  r.raise_lower(1, {"planarity", "nonplanar" + where});
  r.raise_lower(euler_lower_bound(g, surface), {"euler", "girth-aware Euler bound" + where});
  const auto sb = biclique_lower_bound(g, surface);
  if (sb.value > 0)
    r.raise_lower(sb.value, {"subgraph(" + std::to_string(sb.m) + "," + std::to_string(sb.n) + ")",
                             "K_{" + std::to_string(sb.m) + "," + std::to_string(sb.n) + "} subgraph + formula" + where});
}

// Upper bound search shared by both surfaces; r already holds lower bounds.
inline void search_upper(const SimpleGraph& g, Surface surface, const GenusOptions& opt, GenusResult& r) {
  if (r.lower >= opt.skip_search_at) return;
  const int scale = surface == Surface::Orientable ? 2 : 1;
  const int target_euler = scale * r.lower;
  if (auto s = anneal_embedding(g, surface, target_euler, opt.search)) {
    const int v = genus_from_scheme(g, *s, surface);
    r.offer_upper(v, *s, {"search", "annealing, seed " + std::to_string(opt.search.seed)});
  }
  if (r.upper && *r.upper == r.lower) return;
  const double cfg = configuration_count(g);
  const bool full = cfg <= opt.search.exhaustive_cap;
  std::optional<int> incumbent;
  if (r.upper) incumbent = scale * *r.upper;
  auto out = branch_and_bound(g, surface, full ? 0 : opt.search.exhaustive_cap, target_euler, incumbent);
  if (out.best) r.offer_upper(genus_from_scheme(g, *out.best, surface), *out.best, {"exhaustive", "branch-and-bound"});
  if (out.completed && r.upper) {
    r.raise_lower(*r.upper, {"exhaustive", "branch-and-bound over " + std::to_string(out.nodes) + " nodes"});
  }
}

}  // namespace detail

/// Genus of a connected graph: planarity, Euler and K_{m,n} bounds, then
/// annealing and branch-and-bound for the upper bound.
inline GenusResult exact_genus(const SimpleGraph& g, const GenusOptions& opt = {}) {
  if (!is_connected(g)) throw std::invalid_argument("exact_genus needs a connected graph");
  GenusResult r;
  r.surface = Surface::Orientable;
  if (g.edge_count() == 0) {
    r.offer_upper(0, detail::empty_scheme(g), {"planarity", "no edges"});
    r.settle();
    return r;
  }
  auto p = is_planar(g);
  if (p.planar) {
    r.offer_upper(0, *p.embedding, {"planarity", "planar embedding"});
    r.settle();
    return r;
  }
  detail::add_lower_bounds(g, Surface::Orientable, r, "");
  detail::search_upper(g, Surface::Orientable, opt, r);
  r.settle();
  return r;
}

/// Cross-cap of a connected graph, searching signed schemes with at least
/// one negative co-tree edge; also offers 2*genus+1 from an orientable
/// witness.
inline GenusResult exact_crosscap(const SimpleGraph& g, const GenusOptions& opt = {}) {
  if (!is_connected(g)) throw std::invalid_argument("exact_crosscap needs a connected graph");
  GenusResult r;
  r.surface = Surface::Nonorientable;
  if (g.edge_count() == 0) {
    r.offer_upper(0, detail::empty_scheme(g), {"planarity", "no edges"});
    r.settle();
    return r;
  }
  auto p = is_planar(g);
  if (p.planar) {
    r.offer_upper(0, *p.embedding, {"planarity", "planar embedding"});
    r.settle();
    return r;
  }
  detail::add_lower_bounds(g, Surface::Nonorientable, r, "");
  if (r.lower >= opt.skip_search_at) {
    r.settle();
    return r;
  }
  detail::search_upper(g, Surface::Nonorientable, opt, r);
  if (!r.exact && !(r.upper && *r.upper == r.lower)) {
    if (auto o = anneal_embedding(g, Surface::Orientable, 2 * ((r.lower - 1) / 2), opt.search))
      if (auto c = add_crosscap(g, *o)) {
        const int v = trace_faces(g, *c).euler_genus;
        r.offer_upper(v, *c, {"search", "orientable witness plus one cross-cap"});
      }
  }
  r.settle();
  return r;
}

// ---------------------------------------------------------------------------
// Certificate lifting

namespace detail {

struct WorkingScheme {
  std::vector<std::vector<Vertex>> rot;
  std::map<Edge, int> sign;

  static Edge key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

  SimpleGraph graph() const {
    SimpleGraph g(rot.size());
    for (const auto& [e, s] : sign) g.add_edge(e.first, e.second);
    return g;
  }
  EmbeddingScheme scheme(const SimpleGraph& g) const {
    EmbeddingScheme s;
    s.rotations = rot;
    for (const auto& [e, v] : sign) s.signs.push_back({e.first, e.second, v});
    s.graph_checksum = graph_checksum(g);
    return s;
  }
  static void replace(std::vector<Vertex>& r, Vertex from, Vertex to) {
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) throw std::logic_error("lifting: missing rotation entry");
    *it = to;
  }
};

}  // namespace detail

/// Turns a scheme of red.graph into a scheme of `original` with the same
/// Euler genus and orientability by undoing the reduction log.
inline EmbeddingScheme lift_scheme(const SimpleGraph& original, const Reduction& red, const EmbeddingScheme& reduced) {
  const auto base = trace_faces(red.graph, reduced);
  detail::WorkingScheme w;
  w.rot.assign(original.vertex_count(), {});
  for (Vertex i = 0; i < red.graph.vertex_count(); ++i)
    for (Vertex x : reduced.rotations[i]) w.rot[red.original_of[i]].push_back(red.original_of[x]);
  for (const auto& e : reduced.signs) w.sign[detail::WorkingScheme::key(red.original_of[e.u], red.original_of[e.v])] = e.s;

  bool parallel = false;
  for (auto it = red.log.rbegin(); it != red.log.rend(); ++it) {
    const auto& s = *it;
    switch (s.kind) {
      case ReductionKind::DroppedParallel:
        parallel = true;
        break;
      case ReductionKind::RemovedIsolated:
        w.rot[s.v].clear();
        break;
      case ReductionKind::RemovedDegreeOne:
        w.rot[s.v] = {s.a};
        w.rot[s.a].push_back(s.v);
        w.sign[detail::WorkingScheme::key(s.v, s.a)] = 1;
        break;
      case ReductionKind::SuppressedDegreeTwo: {
        const Vertex v = s.v, a = s.a, b = s.b;
        if (!parallel) {
          const auto k = detail::WorkingScheme::key(a, b);
          const int sg = w.sign.at(k);
          w.sign.erase(k);
          detail::WorkingScheme::replace(w.rot[a], b, v);
          detail::WorkingScheme::replace(w.rot[b], a, v);
          w.rot[v] = {a, b};
          w.sign[detail::WorkingScheme::key(a, v)] = sg;
          w.sign[detail::WorkingScheme::key(v, b)] = 1;
          break;
        }
        parallel = false;
        // Route the path a-v-b beside the existing edge ab, keeping the
        // Euler genus and orientability.
        const auto g0 = w.graph();
        const auto before = trace_faces(g0, w.scheme(g0));
        bool done = false;
        for (int side_a = 0; side_a < 2 && !done; ++side_a)
          for (int side_b = 0; side_b < 2 && !done; ++side_b)
            for (int sg : {1, -1}) {
              detail::WorkingScheme t = w;
              auto ia = std::find(t.rot[a].begin(), t.rot[a].end(), b) - t.rot[a].begin() + side_a;
              t.rot[a].insert(t.rot[a].begin() + ia, v);
              auto ib = std::find(t.rot[b].begin(), t.rot[b].end(), a) - t.rot[b].begin() + side_b;
              t.rot[b].insert(t.rot[b].begin() + ib, v);
              t.rot[v] = {a, b};
              t.sign[detail::WorkingScheme::key(a, v)] = sg;
              t.sign[detail::WorkingScheme::key(v, b)] = 1;
              const auto g1 = t.graph();
              const auto after = trace_faces(g1, t.scheme(g1));
              if (after.euler_genus == before.euler_genus && after.orientable == before.orientable) {
                w = std::move(t);
                done = true;
                break;
              }
            }
        if (!done) throw std::logic_error("lifting: no placement preserves the Euler genus");
        break;
      }
      default:
        break;
    }
  }
  auto out = w.scheme(original);
  const auto t = trace_faces(original, out);
  if (t.euler_genus != base.euler_genus || t.orientable != base.orientable)
    throw std::logic_error("lifted scheme changed the Euler genus");
  out.seed = reduced.seed;
  return out;
}

/// Scheme of g assembled from schemes of vertex subsets. parts[i] are the
/// g-vertices of piece i (sorted, matching the piece's local ids); each edge
/// of g lies in exactly one piece and rotations at shared vertices are
/// concatenated.
inline EmbeddingScheme merge_schemes(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& parts,
                                     const std::vector<EmbeddingScheme>& schemes) {
  detail::WorkingScheme w;
  w.rot.assign(g.vertex_count(), {});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& P = parts[i];
    for (std::size_t k = 0; k < P.size(); ++k)
      for (Vertex x : schemes[i].rotations[k]) w.rot[P[k]].push_back(P[x]);
    for (const auto& e : schemes[i].signs) w.sign[detail::WorkingScheme::key(P[e.u], P[e.v])] = e.s;
  }
  auto s = w.scheme(g);
  if (!schemes.empty()) s.seed = schemes.front().seed;
  check_scheme(g, s);
  return s;
}

namespace detail {

inline std::string where(const char* what, std::size_t i) { return std::string(" (") + what + " " + std::to_string(i) + ")"; }

// Genus of a 2-connected block via its homeomorphic reduction.
inline GenusResult block_genus(const SimpleGraph& b, const GenusOptions& opt) {
  GenusResult r;
  if (b.edge_count() <= b.vertex_count()) {
    auto p = is_planar(b);
    r.offer_upper(0, *p.embedding, {"planarity", "edge or cycle"});
    r.settle();
    return r;
  }
  auto p = is_planar(b);
  if (p.planar) {
    r.offer_upper(0, *p.embedding, {"planarity", "planar embedding"});
    r.settle();
    return r;
  }
  r.raise_lower(euler_lower_bound(b, Surface::Orientable), {"euler", "girth-aware Euler bound (unreduced)"});
  const auto red = reduce_homeomorphic(b);
  auto rr = exact_genus(red.graph, opt);
  for (auto& src : rr.provenance) r.provenance.push_back(src);
  r.lower = std::max(r.lower, rr.lower);
  if (rr.upper) {
    r.upper = rr.upper;
    r.certificate = lift_scheme(b, red, *rr.certificate);
  }
  r.settle();
  return r;
}

}  // namespace detail

/// Genus (orientable: summed over components and blocks) or cross-cap
/// (per reduced component; a union of components gets the bracket
/// [max lower, sum of uppers]).
inline GenusResult genus_of_graph(const SimpleGraph& g, Surface surface, const GenusOptions& opt = {}) {
  GenusResult total;
  total.surface = surface;
  const auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> parts;
  std::vector<EmbeddingScheme> schemes;
  bool all_upper = true;
  int upper_sum = 0;

  if (surface == Surface::Orientable) {
    int lower_sum = 0;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const auto comp = induced_subgraph(g, comps[ci]);
      if (comp.edge_count() == 0) {
        parts.push_back(comps[ci]);
        schemes.push_back(detail::empty_scheme(comp));
        continue;
      }
      const auto blocks = block_decomposition(comp);
      std::vector<std::vector<Vertex>> bparts;
      std::vector<EmbeddingScheme> bschemes;
      bool comp_upper = true;
      for (std::size_t bi = 0; bi < blocks.blocks.size(); ++bi) {
        const auto b = induced_subgraph(comp, blocks.blocks[bi]);
        auto br = detail::block_genus(b, opt);
        const auto tag = comps.size() > 1 ? detail::where("component", ci) : std::string();
        for (auto src : br.provenance) {
          src.detail += tag + (blocks.blocks.size() > 1 ? detail::where("block", bi) : std::string());
          total.provenance.push_back(std::move(src));
        }
        lower_sum += br.lower;
        if (br.upper) {
          upper_sum += *br.upper;
          std::vector<Vertex> global;
          for (Vertex x : blocks.blocks[bi]) global.push_back(x);
          bparts.push_back(global);
          bschemes.push_back(*br.certificate);
        } else {
          comp_upper = false;
          all_upper = false;
        }
      }
      if (comp_upper) {
        auto cs = merge_schemes(comp, bparts, bschemes);
        parts.push_back(comps[ci]);
        schemes.push_back(std::move(cs));
      }
    }
    total.lower = lower_sum;
    if (parts.size() + (all_upper ? 0 : 1) > 1 || total.provenance.size() > 1)
      total.provenance.push_back({"additivity", "genus summed over components and blocks", lower_sum, false});
    if (all_upper) {
      total.upper = upper_sum;
      auto s = merge_schemes(g, parts, schemes);
      if (trace_faces(g, s).euler_genus != 2 * upper_sum) throw std::logic_error("merged scheme has the wrong genus");
      total.certificate = std::move(s);
    }
    total.settle();
    return total;
  }

  // Nonorientable.
  auto p = is_planar(g);
  if (p.planar) {
    total.offer_upper(0, *p.embedding, {"planarity", "planar embedding"});
    total.settle();
    return total;
  }
  int lower_max = 0;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto comp = induced_subgraph(g, comps[ci]);
    const auto tag = comps.size() > 1 ? detail::where("component", ci) : std::string();
    auto cp = is_planar(comp);
    if (cp.planar) {
      parts.push_back(comps[ci]);
      schemes.push_back(*cp.embedding);
      continue;
    }
    GenusResult cr;
    cr.surface = Surface::Nonorientable;
    cr.raise_lower(euler_lower_bound(comp, Surface::Nonorientable), {"euler", "girth-aware Euler bound (unreduced)" + tag});
    // Euler genus is additive over blocks and bounds the cross-cap.
    {
      const auto blocks = block_decomposition(comp);
      int eg = 0;
      for (const auto& bv : blocks.blocks) {
        const auto b = induced_subgraph(comp, bv);
        if (b.edge_count() <= b.vertex_count() || is_planar(b).planar) continue;
        const auto rb = reduce_homeomorphic(b).graph;
        const int lo = std::max({1, euler_lower_bound(rb, Surface::Orientable), biclique_lower_bound(rb, Surface::Orientable).value});
        const int ln = std::max({1, euler_lower_bound(rb, Surface::Nonorientable), biclique_lower_bound(rb, Surface::Nonorientable).value});
        eg += std::min(2 * lo, ln);
      }
      if (blocks.blocks.size() > 1) cr.raise_lower(eg, {"additivity", "Euler genus summed over blocks" + tag});
    }
    const auto red = reduce_homeomorphic(comp);
    auto rr = exact_crosscap(red.graph, opt);
    for (auto src : rr.provenance) {
      src.detail += tag;
      cr.provenance.push_back(std::move(src));
    }
    cr.lower = std::max(cr.lower, rr.lower);
    for (auto& src : cr.provenance) total.provenance.push_back(src);
    lower_max = std::max(lower_max, cr.lower);
    if (rr.upper) {
      upper_sum += *rr.upper;
      parts.push_back(comps[ci]);
      schemes.push_back(lift_scheme(comp, red, *rr.certificate));
    } else {
      all_upper = false;
    }
  }
  total.lower = lower_max;
  if (all_upper) {
    auto s = merge_schemes(g, parts, schemes);
    const auto t = trace_faces(g, s);
    if (t.orientable || t.euler_genus != upper_sum) throw std::logic_error("merged nonorientable scheme is inconsistent");
    total.upper = upper_sum;
    total.certificate = std::move(s);
  }
  total.settle();
  return total;
}

}  // namespace diffgraph
