#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "diffgraph/group.hpp"

namespace diffgraph {

struct IsomorphismResult {
  bool isomorphic = false;
  /// map[a] = image of element a of the first group, when isomorphic.
  std::optional<std::vector<Element>> map;
};

namespace detail {

// Per-element invariant preserved by isomorphisms.
struct ElementSignature {
  std::uint32_t order;
  std::uint32_t centralizer;
  std::uint32_t square_order;
  std::uint32_t root_count;  // number of h with h^2 = g
  auto operator<=>(const ElementSignature&) const = default;
};

inline std::vector<ElementSignature> element_signatures(const GroupTable& G) {
  const auto n = G.order();
  std::vector<ElementSignature> sig(n);
  std::vector<std::uint32_t> roots(n, 0);
  for (Element h = 0; h < n; ++h) ++roots[G.mul(h, h)];
  for (Element g = 0; g < n; ++g) {
    std::uint32_t c = 0;
    for (Element h = 0; h < n; ++h) c += G.mul(g, h) == G.mul(h, g);
    sig[g] = {G.element_order(g), c, G.element_order(G.mul(g, g)), roots[g]};
  }
  return sig;
}

// Greedy generating set: repeatedly add an element of largest order outside
// the current subgroup.
inline std::vector<Element> greedy_generators(const GroupTable& G) {
  std::vector<Element> gens;
  DynamicBitset current(G.order());
  current.set(0);
  std::vector<Element> by_order(G.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return G.element_order(a) > G.element_order(b); });
  while (current.count() < G.order()) {
    for (Element g : by_order) {
      if (!current.test(g)) {
        gens.push_back(g);
        current = generated_subgroup(G, gens);
        break;
      }
    }
  }
  return gens;
}

}  // namespace detail

/// Isomorphism test for groups of equal order up to `cap` elements.
/// Deterministic: the witness is the first map found in a fixed search order.
inline IsomorphismResult group_isomorphic(const GroupTable& A, const GroupTable& B, std::size_t cap = 128) {
  if (A.order() != B.order()) return {};
  if (A.order() > cap)
    throw CapExceeded("isomorphism test on order " + std::to_string(A.order()) + " exceeds cap " + std::to_string(cap));
  const auto n = A.order();
  if (n == 1) return {true, std::vector<Element>{0}};
  auto sa = detail::element_signatures(A);
  auto sb = detail::element_signatures(B);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return {};
  }
  const auto gens = detail::greedy_generators(A);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element b = 0; b < n; ++b)
      if (sb[b] == sa[gens[i]]) candidates[i].push_back(b);

  std::vector<Element> images(gens.size());
  std::vector<Element> phi(n);
  std::vector<char> assigned(n), used(n);

  // Extends the map over <gens[0..k]> by BFS; false on inconsistency or
  // non-injectivity.
  auto extend = [&](std::size_t k) -> bool {
    std::fill(assigned.begin(), assigned.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    std::vector<Element> queue{0};
    assigned[0] = 1;
    used[0] = 1;
    phi[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element h = queue[q];
      for (std::size_t j = 0; j <= k; ++j) {
        const Element x = A.mul(h, gens[j]);
        const Element img = B.mul(phi[h], images[j]);
        if (assigned[x]) {
          if (phi[x] != img) return false;
        } else {
          if (used[img]) return false;
          assigned[x] = 1;
          used[img] = 1;
          phi[x] = img;
          queue.push_back(x);
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    for (Element b : candidates[k]) {
      images[k] = b;
      if (extend(k) && search(k + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return {};
  extend(gens.size() - 1);
  IsomorphismResult r;
  r.isomorphic = true;
  r.map = phi;
  return r;
}

/// Checks that `map` is a bijective homomorphism A -> B.
inline bool is_isomorphism(const GroupTable& A, const GroupTable& B, const std::vector<Element>& map) {
  if (A.order() != B.order() || map.size() != A.order()) return false;
  std::vector<char> hit(B.order(), 0);
  for (auto v : map) {
    if (v >= B.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Element x = 0; x < A.order(); ++x)
    for (Element y = 0; y < A.order(); ++y)
      if (map[A.mul(x, y)] != B.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace diffgraph
