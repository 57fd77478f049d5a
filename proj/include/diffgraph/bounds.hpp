#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "diffgraph/embedding.hpp"
#include "diffgraph/graph.hpp"
#include "diffgraph/numtheory.hpp"

namespace diffgraph {

enum class FormulaKind { Complete, CompleteBipartite };

/// Closed-form genus (orientable) and cross-cap (nonorientable) of K_n and
/// K_{m,n}. For Complete pass n as `a` (b ignored).
inline int formula_oracle(FormulaKind kind, long long a, long long b, Surface surface) {
  auto ceil_div = [](long long x, long long y) { return x <= 0 ? 0LL : (x + y - 1) / y; };
  if (kind == FormulaKind::Complete) {
    if (a < 3) throw std::invalid_argument("complete-graph formula needs n >= 3");
    if (surface == Surface::Orientable) return static_cast<int>(ceil_div((a - 3) * (a - 4), 12));
    if (a == 7) return 3;
    return static_cast<int>(ceil_div((a - 3) * (a - 4), 6));
  }
  if (a < 2 || b < 2) throw std::invalid_argument("complete-bipartite formula needs m, n >= 2");
  if (surface == Surface::Orientable) return static_cast<int>(ceil_div((a - 2) * (b - 2), 4));
  return static_cast<int>(ceil_div((a - 2) * (b - 2), 2));
}

/// Euler-formula lower bound with faces of length at least the girth. Works on
/// the 2-core so pendant trees cannot create short faces.
inline int euler_lower_bound(const SimpleGraph& g, Surface surface) {
  if (g.edge_count() == 0) throw std::invalid_argument("Euler bound needs at least one edge");
  if (!is_connected(g)) throw std::invalid_argument("Euler bound needs a connected graph; apply it per component");
  const auto core = induced_subgraph(g, two_core(g));
  const auto gi = girth_and_bipartite(core);
  if (!gi.girth) return 0;
  const long long L = static_cast<long long>(*gi.girth);
  const long long V = static_cast<long long>(core.vertex_count());
  const long long E = static_cast<long long>(core.edge_count());
  // Euler genus >= E(L-2)/L - V + 2, i.e. (E(L-2) - L(V-2)) / L.
  const long long num = E * (L - 2) - L * (V - 2);
  if (num <= 0) return 0;
  if (surface == Surface::Orientable) return static_cast<int>((num + 2 * L - 1) / (2 * L));
  return static_cast<int>((num + L - 1) / L);
}

struct SubgraphBound {
  int value = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<BicliqueWitness> witness;
};

/// Best bound from a K_{m,n} subgraph with 2 <= m <= 4 via the bipartite
/// formulas.
inline SubgraphBound biclique_lower_bound(const SimpleGraph& g, Surface surface) {
  SubgraphBound best;
  for (std::size_t m = 2; m <= kBicliqueSideCap; ++m) {
    auto [n, w] = max_complete_bipartite(g, m);
    if (n < 2) continue;
    const int v = formula_oracle(FormulaKind::CompleteBipartite, static_cast<long long>(m), static_cast<long long>(n), surface);
    if (v > best.value) best = {v, m, n, w};
  }
  return best;
}

}  // namespace diffgraph
