#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "diffgraph/embedding.hpp"
#include "diffgraph/graph.hpp"

namespace diffgraph {

/// Search limits shared by the exact and heuristic engines.
struct SearchBudget {
  /// Exhaustive search runs to completion when the rotation configuration
  /// count is at most this; above it, the same number bounds visited nodes.
  double exhaustive_cap = 1e7;
  int restarts = 64;
  int moves = 20000;
  std::uint64_t seed = 1;
};

/// Product over vertices of (deg-1)!, halved for the reflection quotient.
inline double configuration_count(const SimpleGraph& g) {
  double lg = 0;
  std::size_t maxdeg = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    lg += std::lgamma(static_cast<double>(std::max<std::size_t>(g.degree(v), 1)));
    maxdeg = std::max(maxdeg, g.degree(v));
  }
  if (maxdeg >= 3) lg -= std::log(2.0);
  return std::exp(lg);
}

struct BnbOutcome {
  bool completed = false;  // optimum proven (space exhausted or target met)
  std::optional<EmbeddingScheme> best;
  std::optional<int> best_euler_genus;
  std::uint64_t nodes = 0;
};

namespace detail {

class RotationSearch {
 public:
  RotationSearch(const SimpleGraph& g, Surface surface) : g_(g), ix_(g), nonori_(surface == Surface::Nonorientable) {
    const auto n = g.vertex_count();
    order_vertices();
    tree_edge_.assign(ix_.edges.size(), 0);
    sign_.assign(ix_.edges.size(), 0);
    std::vector<char> placed(n, 0);
    for (std::size_t k = 0; k < ord_.size(); ++k) {
      const Vertex v = ord_[k];
      if (k > 0) {
        // Tree edge to the earliest-placed neighbour.
        std::size_t best_slot = 0;
        std::size_t best_rank = std::numeric_limits<std::size_t>::max();
        const auto& nb = g.neighbors(v);
        for (std::size_t s = 0; s < nb.size(); ++s)
          if (placed[nb[s]] && rank_[nb[s]] < best_rank) {
            best_rank = rank_[nb[s]];
            best_slot = s;
          }
        const auto e = ix_.edge[ix_.offset[v] + best_slot];
        tree_edge_[e] = 1;
        sign_[e] = 1;
      }
      placed[v] = 1;
    }
    for (std::size_t e = 0; e < ix_.edges.size(); ++e)
      if (!tree_edge_[e]) ++unassigned_cotree_;
    cotree_total_ = unassigned_cotree_;
    bool leaf = false;
    for (Vertex v = 0; v < n; ++v) leaf = leaf || g.degree(v) == 1;
    auto gi = girth_and_bipartite(g);
    min_len_ = (leaf || !gi.girth) ? 1 : static_cast<int>(*gi.girth);
    const auto states = ix_.darts() * (nonori_ ? 2 : 1);
    other_.resize(states);
    len_.assign(states, 1);
    std::iota(other_.begin(), other_.end(), 0U);
    open_chains_ = static_cast<int>(states);
    open_states_ = static_cast<int>(states);
    seq_.resize(n);
    used_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      seq_[v].assign(g.degree(v), 0);
      used_[v].assign(g.degree(v), 0);
    }
  }

  BnbOutcome run(double node_cap, int target_euler, std::optional<int> incumbent_euler) {
    const int base = 2 - static_cast<int>(g_.vertex_count()) + static_cast<int>(g_.edge_count());
    target_faces_ = base - target_euler;
    best_faces_ = incumbent_euler ? base - *incumbent_euler : -1;
    node_cap_ = node_cap;
    BnbOutcome out;
    if (nonori_ && cotree_total_ == 0) {
      out.completed = true;
      return out;
    }
    if (best_faces_ >= target_faces_) {
      out.completed = true;
      return out;
    }
    vertex_step(0);
    out.nodes = nodes_;
    out.completed = !aborted_;
    if (found_) {
      EmbeddingScheme s;
      s.rotations = best_rot_;
      for (std::size_t e = 0; e < ix_.edges.size(); ++e)
        s.signs.push_back({ix_.edges[e].first, ix_.edges[e].second, best_sign_[e]});
      s.graph_checksum = graph_checksum(g_);
      const auto t = trace_faces(g_, s);
      if (static_cast<int>(t.faces) != best_faces_ || (nonori_ && t.orientable))
        throw std::logic_error("branch-and-bound produced an inconsistent scheme");
      out.best_euler_genus = t.euler_genus;
      out.best = std::move(s);
    }
    return out;
  }

 private:
  struct Undo {
    std::uint32_t h, oh, lh, t, ot, lt;
    int closed, chains, states;
  };

  void order_vertices() {
    const auto n = g_.vertex_count();
    rank_.assign(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> placed_nb(n, 0);
    std::vector<char> placed(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      Vertex pick = 0;
      bool have = false;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (!have || placed_nb[v] > placed_nb[pick] ||
            (placed_nb[v] == placed_nb[pick] && g_.degree(v) > g_.degree(pick))) {
          pick = v;
          have = true;
        }
      }
      placed[pick] = 1;
      rank_[pick] = k;
      ord_.push_back(pick);
      for (Vertex w : g_.neighbors(pick)) ++placed_nb[w];
    }
  }

  std::uint32_t state(std::size_t dart, int dir) const {
    return nonori_ ? static_cast<std::uint32_t>((dart << 1) | (dir < 0 ? 1U : 0U)) : static_cast<std::uint32_t>(dart);
  }

  Undo link(std::uint32_t a, std::uint32_t b) {
    Undo u{a, other_[a], len_[a], b, other_[b], len_[b], closed_, open_chains_, open_states_};
    if (other_[a] == b) {
      ++closed_;
      --open_chains_;
      open_states_ -= static_cast<int>(len_[a]);
      return u;
    }
    const std::uint32_t h = other_[a];
    const std::uint32_t t = other_[b];
    const std::uint32_t L = len_[a] + len_[b];
    u.h = h;
    u.oh = other_[h];
    u.lh = len_[h];
    u.t = t;
    u.ot = other_[t];
    u.lt = len_[t];
    other_[h] = t;
    other_[t] = h;
    len_[h] = L;
    len_[t] = L;
    --open_chains_;
    return u;
  }

  void unlink(const Undo& u) {
    other_[u.t] = u.ot;
    len_[u.t] = u.lt;
    other_[u.h] = u.oh;
    len_[u.h] = u.lh;
    closed_ = u.closed;
    open_chains_ = u.chains;
    open_states_ = u.states;
  }

  bool promising() const {
    const int ub_orbits = closed_ + std::min(open_chains_, open_states_ / min_len_);
    const int ub_faces = nonori_ ? ub_orbits / 2 : ub_orbits;
    return ub_faces > best_faces_;
  }

  bool should_stop() const { return aborted_ || best_faces_ >= target_faces_; }

  // Links rotation successor next(x) = y at vertex v (x, y neighbour slots).
  int link_successor(Vertex v, std::size_t x, std::size_t y, Undo* undo) {
    const std::size_t dx = ix_.offset[v] + x;
    const std::size_t dy = ix_.offset[v] + y;
    if (!nonori_) {
      undo[0] = link(state(ix_.rev[dx], 1), state(dy, 1));
      return 1;
    }
    const int sx = sign_[ix_.edge[dx]];
    const int sy = sign_[ix_.edge[dy]];
    undo[0] = link(state(ix_.rev[dx], sx), state(dy, 1));
    undo[1] = link(state(ix_.rev[dy], -sy), state(dx, -1));
    return 2;
  }

  void unlink_all(const Undo* undo, int k) {
    for (int i = k - 1; i >= 0; --i) unlink(undo[i]);
  }

  void vertex_step(std::size_t k) {
    if (should_stop()) return;
    if (k == ord_.size()) {
      leaf();
      return;
    }
    if (nonori_) {
      pending_.clear();
      const Vertex v = ord_[k];
      for (std::size_t s = 0; s < g_.degree(v); ++s) {
        const auto e = ix_.edge[ix_.offset[v] + s];
        if (sign_[e] == 0) pending_.push_back(e);
      }
      auto pend = pending_;
      sign_step(k, pend, 0);
    } else {
      start_rotation(k);
    }
  }

  void sign_step(std::size_t k, const std::vector<std::size_t>& pend, std::size_t i) {
    if (should_stop()) return;
    if (i == pend.size()) {
      start_rotation(k);
      return;
    }
    const auto e = pend[i];
    for (int s : {-1, 1}) {
      sign_[e] = s;
      --unassigned_cotree_;
      if (s < 0) ++negatives_;
      if (!(unassigned_cotree_ == 0 && negatives_ == 0)) sign_step(k, pend, i + 1);
      if (s < 0) --negatives_;
      ++unassigned_cotree_;
      sign_[e] = 0;
      if (should_stop()) return;
    }
  }

  void start_rotation(std::size_t k) {
    const Vertex v = ord_[k];
    seq_[v][0] = 0;
    used_[v][0] = 1;
    rotation_step(k, 1);
    used_[v][0] = 0;
  }

  void rotation_step(std::size_t k, std::size_t p) {
    const Vertex v = ord_[k];
    const auto deg = g_.degree(v);
    Undo undo[2];
    if (p == deg) {
      if (k == 0 && deg >= 3 && seq_[v][1] > seq_[v][deg - 1]) return;
      const int c = link_successor(v, seq_[v][deg - 1], seq_[v][0], undo);
      if (++nodes_ >= node_cap_) aborted_ = true;
      if (!aborted_ && promising()) vertex_step(k + 1);
      unlink_all(undo, c);
      return;
    }
    for (std::size_t y = 1; y < deg; ++y) {
      if (used_[v][y]) continue;
      const int c = link_successor(v, seq_[v][p - 1], y, undo);
      if (++nodes_ >= node_cap_) aborted_ = true;
      if (!aborted_ && promising()) {
        seq_[v][p] = y;
        used_[v][y] = 1;
        rotation_step(k, p + 1);
        used_[v][y] = 0;
      }
      unlink_all(undo, c);
      if (should_stop()) return;
    }
  }

  void leaf() {
    if (nonori_ && negatives_ == 0) return;
    const int faces = nonori_ ? closed_ / 2 : closed_;
    if (faces <= best_faces_) return;
    best_faces_ = faces;
    found_ = true;
    best_rot_.assign(g_.vertex_count(), {});
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      for (auto s : seq_[v]) best_rot_[v].push_back(g_.neighbors(v)[s]);
    best_sign_.assign(sign_.size(), 1);
    for (std::size_t e = 0; e < sign_.size(); ++e) best_sign_[e] = sign_[e] == 0 ? 1 : sign_[e];
  }

  const SimpleGraph& g_;
  DartIndex ix_;
  bool nonori_;
  std::vector<Vertex> ord_;
  std::vector<std::size_t> rank_;
  std::vector<char> tree_edge_;
  std::vector<int> sign_;
  std::vector<std::size_t> pending_;
  int unassigned_cotree_ = 0;
  int cotree_total_ = 0;
  int negatives_ = 0;
  int min_len_ = 1;
  std::vector<std::uint32_t> other_;
  std::vector<std::uint32_t> len_;
  int closed_ = 0;
  int open_chains_ = 0;
  int open_states_ = 0;
  std::vector<std::vector<std::size_t>> seq_;
  std::vector<std::vector<char>> used_;
  int target_faces_ = 0;
  int best_faces_ = -1;
  double node_cap_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool found_ = false;
  std::vector<std::vector<Vertex>> best_rot_;
  std::vector<int> best_sign_;
};

}  // namespace detail

/// Exhaustive branch-and-bound over rotation systems (and, for the
/// nonorientable surface, co-tree edge signs with at least one -1). Maximises
/// the face count; stops early once Euler genus `target_euler` is reached.
/// Only schemes strictly better than `incumbent_euler` are reported.
/// `node_cap` <= 0 means unlimited. Requires a connected graph with an edge.
inline BnbOutcome branch_and_bound(const SimpleGraph& g, Surface surface, double node_cap, int target_euler,
                                   std::optional<int> incumbent_euler = std::nullopt) {
  if (g.edge_count() == 0 || !is_connected(g)) throw std::invalid_argument("branch-and-bound needs a connected graph with edges");
  detail::RotationSearch rs(g, surface);
  return rs.run(node_cap <= 0 ? std::numeric_limits<double>::infinity() : node_cap, target_euler, incumbent_euler);
}

namespace detail {

// Annealing over rotations (and signs). Cost is Euler genus, plus one for
// orientable states when a nonorientable scheme is wanted.
class Annealer {
 public:
  Annealer(const SimpleGraph& g, Surface surface) : g_(g), ix_(g), nonori_(surface == Surface::Nonorientable) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) >= 3) movable_.push_back(v);
    base_ = 2 * static_cast<int>(connected_components(g).size()) - static_cast<int>(g.vertex_count()) +
            static_cast<int>(g.edge_count());
  }

  std::optional<EmbeddingScheme> run(int target_euler, std::uint64_t seed, int restarts, int moves) {
    std::optional<EmbeddingScheme> best;
    int best_cost = std::numeric_limits<int>::max();
    for (int r = 0; r < restarts; ++r) {
      std::seed_seq ss{seed, static_cast<std::uint64_t>(r), std::uint64_t{0x9e3779b97f4a7c15ULL}};
      std::mt19937_64 rng(ss);
      randomize(rng);
      int cost = evaluate();
      int local_best = cost;
      save_if_better(cost, best_cost, best);
      const double t0 = 1.0, t1 = 0.05;
      for (int m = 0; m < moves && best_cost > target_euler; ++m) {
        const double temp = t0 * std::pow(t1 / t0, static_cast<double>(m) / std::max(1, moves - 1));
        const bool flip = nonori_ && (movable_.empty() || std::uniform_real_distribution<>(0, 1)(rng) < 0.25);
        std::size_t e = 0;
        Vertex v = 0;
        std::vector<std::size_t> saved;
        if (flip) {
          e = std::uniform_int_distribution<std::size_t>(0, sign_.size() - 1)(rng);
          sign_[e] = -sign_[e];
        } else {
          if (movable_.empty()) break;
          v = movable_[std::uniform_int_distribution<std::size_t>(0, movable_.size() - 1)(rng)];
          saved = rot_[v];
          const auto deg = rot_[v].size();
          const auto i = std::uniform_int_distribution<std::size_t>(0, deg - 1)(rng);
          auto j = std::uniform_int_distribution<std::size_t>(0, deg - 2)(rng);
          if (j >= i) ++j;
          const auto d = rot_[v][i];
          rot_[v].erase(rot_[v].begin() + static_cast<std::ptrdiff_t>(i));
          rot_[v].insert(rot_[v].begin() + static_cast<std::ptrdiff_t>(std::min(j, deg - 1)), d);
          for (std::size_t q = 0; q < deg; ++q) rpos_[rot_[v][q]] = q;
        }
        const int next = evaluate();
        const int delta = next - cost;
        if (delta <= 0 || std::uniform_real_distribution<>(0, 1)(rng) < std::exp(-delta / temp)) {
          cost = next;
          if (cost < local_best) local_best = cost;
          save_if_better(cost, best_cost, best);
        } else if (flip) {
          sign_[e] = -sign_[e];
        } else {
          rot_[v] = saved;
          for (std::size_t q = 0; q < saved.size(); ++q) rpos_[saved[q]] = q;
        }
      }
      if (best_cost <= target_euler) break;
    }
    return best;
  }

 private:
  void randomize(std::mt19937_64& rng) {
    rot_.assign(g_.vertex_count(), {});
    rpos_.assign(ix_.darts(), 0);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      for (std::size_t k = 0; k < g_.degree(v); ++k) rot_[v].push_back(ix_.offset[v] + k);
      std::shuffle(rot_[v].begin(), rot_[v].end(), rng);
      for (std::size_t q = 0; q < rot_[v].size(); ++q) rpos_[rot_[v][q]] = q;
    }
    sign_.assign(ix_.edges.size(), 1);
    if (nonori_)
      for (auto& s : sign_) s = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  }

  bool orientable() const {
    std::vector<int> color(g_.vertex_count(), -1);
    for (Vertex r = 0; r < g_.vertex_count(); ++r) {
      if (color[r] >= 0) continue;
      color[r] = 0;
      std::vector<Vertex> q{r};
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Vertex u = q[i];
        for (std::size_t k = 0; k < g_.degree(u); ++k) {
          const auto d = ix_.offset[u] + k;
          const Vertex w = ix_.head[d];
          const int want = color[u] ^ (sign_[ix_.edge[d]] < 0 ? 1 : 0);
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

  int evaluate() {
    const auto orbits = trace_orbits(ix_, rot_, rpos_, sign_);
    std::size_t isolated = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) isolated += g_.degree(v) == 0;
    faces_ = static_cast<int>(orbits.size() / 2 + isolated);
    int eg = base_ - faces_;
    last_orientable_ = !nonori_ || orientable();
    if (nonori_ && last_orientable_) ++eg;
    return eg;
  }

  void save_if_better(int cost, int& best_cost, std::optional<EmbeddingScheme>& best) {
    if (cost >= best_cost) return;
    if (nonori_ && last_orientable_) return;
    best_cost = cost;
    EmbeddingScheme s;
    s.rotations.assign(g_.vertex_count(), {});
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      for (auto d : rot_[v]) s.rotations[v].push_back(ix_.head[d]);
    for (std::size_t e = 0; e < ix_.edges.size(); ++e) s.signs.push_back({ix_.edges[e].first, ix_.edges[e].second, sign_[e]});
    s.graph_checksum = graph_checksum(g_);
    best = std::move(s);
  }

  const SimpleGraph& g_;
  DartIndex ix_;
  bool nonori_;
  std::vector<Vertex> movable_;
  int base_ = 0;
  std::vector<std::vector<std::size_t>> rot_;
  std::vector<std::size_t> rpos_;
  std::vector<int> sign_;
  int faces_ = 0;
  bool last_orientable_ = true;
};

}  // namespace detail

/// Best scheme found by annealing (nonorientable schemes only when asked
/// for), stopping once Euler genus `target_euler` is reached. The result is
/// re-traced before return.
inline std::optional<EmbeddingScheme> anneal_embedding(const SimpleGraph& g, Surface surface, int target_euler,
                                                       const SearchBudget& budget) {
  if (g.edge_count() == 0) return std::nullopt;
  detail::Annealer a(g, surface);
  auto s = a.run(target_euler, budget.seed, budget.restarts, budget.moves);
  if (s) {
    s->seed = budget.seed;
    const auto t = trace_faces(g, *s);
    if (surface == Surface::Nonorientable && t.orientable) throw std::logic_error("annealer returned an orientable scheme");
  }
  return s;
}

/// Scheme realising genus (or cross-cap) at most `target`, or none.
inline std::optional<EmbeddingScheme> heuristic_embedding(const SimpleGraph& g, int target, Surface surface,
                                                          const SearchBudget& budget) {
  if (target == 0) surface = Surface::Orientable;  // cross-cap 0 means planar
  const int target_euler = surface == Surface::Orientable ? 2 * target : target;
  auto s = anneal_embedding(g, surface, target_euler, budget);
  if (!s) return std::nullopt;
  const auto t = trace_faces(g, *s);
  if (t.euler_genus > target_euler) return std::nullopt;
  return s;
}

}  // namespace diffgraph
