#pragma once

#include <set>
#include <string>
#include <vector>

#include "diffgraph/group.hpp"
#include "diffgraph/isomorphism.hpp"

namespace diffgraph {

enum class Condition { C1, C2, C3 };

inline std::string to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
  }
  return "?";
}

inline constexpr const char* kConditionReading =
    "all maximal cyclic pairs other than those named by the condition, order-2 ones included, must meet trivially";

struct ConditionReport {
  Condition condition = Condition::C1;
  bool holds = false;
  /// Every maximal cyclic subgroup of P, in the order of `pattern`.
  std::vector<Subgroup> maximal;
  /// Pairwise intersection orders of `maximal` (diagonal = orders).
  std::vector<std::vector<std::size_t>> pattern;
  /// Indices into `maximal` of the order-4 subgroups meeting another one
  /// nontrivially.
  std::vector<std::size_t> witness;
  std::string reading = kConditionReading;
  std::string explanation;
};

/// Tests the order-4 maximal cyclic intersection pattern of a 2-group.
/// C1: exactly one nontrivial pair; C2: exactly two disjoint nontrivial
/// pairs; C3: exactly the three pairs of one triple sharing an order-2
/// subgroup. Every nontrivial intersection must have order 2 between order-4
/// subgroups, and P must have exponent 4.
inline ConditionReport check_condition(const GroupTable& P, Condition which) {
  if (!nt::is_power_of_two(P.order()) || P.order() < 2) throw std::invalid_argument(P.source() + " is not a 2-group");
  ConditionReport r;
  r.condition = which;
  r.maximal = maximal_cyclic_subgroups(P);
  r.pattern = intersection_pattern(r.maximal);
  const auto m = r.maximal.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool shape_ok = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (r.pattern[i][j] > 1) {
        pairs.emplace_back(i, j);
        if (r.maximal[i].order() != 4 || r.maximal[j].order() != 4 || r.pattern[i][j] != 2) shape_ok = false;
      }
  std::set<std::size_t> involved;
  for (auto [i, j] : pairs) {
    involved.insert(i);
    involved.insert(j);
  }
  r.witness.assign(involved.begin(), involved.end());
  const auto e = exponent(P);
  std::string why;
  if (e != 4) {
    why = "exponent is " + std::to_string(e) + ", not 4";
  } else if (!shape_ok) {
    why = "a nontrivial intersection is not an order-2 meet of two order-4 subgroups";
  } else {
    switch (which) {
      case Condition::C1:
        r.holds = pairs.size() == 1;
        why = std::to_string(pairs.size()) + " nontrivially meeting pair(s), need exactly 1";
        break;
      case Condition::C2:
        r.holds = pairs.size() == 2 && involved.size() == 4;
        why = std::to_string(pairs.size()) + " nontrivially meeting pair(s) on " + std::to_string(involved.size()) +
              " subgroups, need 2 disjoint pairs";
        break;
      case Condition::C3: {
        bool triple = pairs.size() == 3 && involved.size() == 3;
        if (triple) {
          auto common = r.maximal[r.witness[0]].members;
          for (auto i : r.witness) common &= r.maximal[i].members;
          triple = common.count() == 2;
        }
        r.holds = triple;
        why = std::to_string(pairs.size()) + " nontrivially meeting pair(s) on " + std::to_string(involved.size()) +
              " subgroups, need one triple with a common order-2 subgroup";
        break;
      }
    }
  }
  r.explanation = (r.holds ? "holds: " : "fails: ") + why;
  return r;
}

inline constexpr int kGE3 = 3;

struct GenusClass {
  int value = 0;  // 0, 1, 2 or kGE3
  std::string basis;
  std::string witness;  // lower-bound witness for GE3
  std::string label() const { return value >= kGE3 ? "GE3" : std::to_string(value); }
};

namespace detail {

struct Profile {
  std::vector<std::uint64_t> primes;
  std::vector<GroupTable> sylow;
  std::vector<std::uint64_t> orders;
  std::vector<std::uint64_t> exponents;
};

inline Profile profile(const GroupTable& G) {
  Profile p;
  const auto d = sylow_decomposition(G);
  p.primes = d.primes;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    p.sylow.push_back(subgroup_table(G, d.components[i].members));
    p.orders.push_back(p.sylow.back().order());
    p.exponents.push_back(exponent(p.sylow.back()));
  }
  return p;
}

inline bool iso_to(const GroupTable& G, const char* descriptor) {
  const auto d = parse_descriptor(descriptor);
  if (d.order() != G.order()) return false;
  return group_isomorphic(G, build_group(d), 256).isomorphic;
}

inline std::string km(std::uint64_t m, std::uint64_t n) {
  return "K_{" + std::to_string(m) + "," + std::to_string(n) + "} subgraph";
}

struct Analysis {
  GenusClass genus;
  GenusClass crosscap;
};

// Lower-bound case for groups outside the genus <= 2 families.
inline GenusClass ge3_case(const GroupTable& G, const Profile& p) {
  GenusClass c;
  c.value = kGE3;
  const auto r = p.primes.size();
  if (r >= 4) {
    c.basis = "four or more prime divisors";
    c.witness = km(7, 6);
    return c;
  }
  if (r == 3) {
    if (p.primes[2] == 5) {
      c.basis = "three primes 2, 3, 5: elements of orders 10 and 15 in a cyclic subgroup of order 30";
      c.witness = km(4, 8);
    } else {
      c.basis = "three primes, largest at least 7";
      c.witness = km(5, 6);
    }
    return c;
  }
  const auto p1 = p.primes[0], p2 = p.primes[1];
  const auto n1 = p.orders[0], n2 = p.orders[1];
  const auto e1 = p.exponents[0], e2 = p.exponents[1];
  if (p1 >= 7) {
    c.basis = "smallest prime at least 7";
    c.witness = km(6, 10);
  } else if (p1 == 5) {
    if (n1 == 5 && n2 == p2) {
      c.basis = "Z5 x Zp with p >= 11";
      c.witness = km(4, p2 - 1);
    } else {
      c.basis = "5-part or second Sylow part of non-prime order";
      c.witness = km(n1 - 1, n2 - 1);
    }
  } else if (p1 == 3) {
    if (n1 == 3) {
      c.basis = "Z3 x Q with exp(Q) = p^a, a >= 2";
      c.witness = km(2 * (p2 - 1), p2 * (p2 - 1));
    } else {
      c.basis = "3-part of order at least 9";
      c.witness = km(8, 4);
    }
  } else if (n1 == 2) {
    if (p2 == 3 && e2 == 9) {
      c.basis = "Z2 x Q with Q a 3-group of exponent 9 holding two cyclic subgroups of order 9";
      c.witness = km(3, 12);
    } else if (p2 == 3) {
      c.basis = "Z2 x Q with exp(Q) >= 27";
      c.witness = km(6, 18);
    } else {
      c.basis = "Z2 x Q with exp(Q) = p^a, p >= 5, a >= 2";
      c.witness = km(p2 - 1, p2 * (p2 - 1));
    }
  } else if (n1 == 4) {
    if (n2 == 9) {
      if (iso_to(G, "Z36")) {
        c.basis = "Z36: elements of order 9 against orders 2, 4, 6";
        c.witness = km(6, 5);
      } else {
        c.basis = "Z2^2 x Z9: three maximal cyclic subgroups share the order-9 elements";
        c.witness = km(6, 9);
      }
    } else if (n2 == p2) {
      c.basis = "2-part of order 4 with Zp, p >= 13";
      c.witness = km(3, p2 - 1);
    } else {
      c.basis = "2-part of order 4 with a second Sylow part of order " + std::to_string(n2);
      c.witness = km(3, n2 - 1);
    }
  } else {
    // |P1| >= 8
    if (p2 == 3 && n2 >= 9) {
      c.basis = "2-part of order at least 8 with a 3-part of order at least 9";
      c.witness = km(7, 8);
    } else if (p2 == 3 && e1 >= 8) {
      c.basis = "2-part of exponent at least 8 with Z3";
      c.witness = km(4, 8);
    } else if (p2 == 3) {
      c.basis = "exponent-4 2-part with Z3 outside C1-C3";
      const auto rep = check_condition(p.sylow[0], Condition::C1);
      std::size_t best = 0;
      for (auto i : rep.witness) {
        std::size_t k = 0;
        for (auto j : rep.witness) k += rep.pattern[i][j] > 1;
        best = std::max(best, k);
      }
      c.witness = best >= 4 ? km(8, 4) + " (four order-4 subgroups share an involution)"
                            : "order-4 maximal cyclic intersection pattern blocks an embedding in the double torus";
    } else {
      c.basis = "2-part of order at least 8 with a Sylow part for p >= 5";
      c.witness = km(7, n2 - 1);
    }
  }
  return c;
}

inline Analysis analyze(const GroupTable& G) {
  if (!is_nilpotent(G)) throw NotNilpotent(G.source() + " is not nilpotent");
  Analysis a;
  if (G.order() == 1 || is_p_group(G)) {
    a.genus = {0, "null graph (p-group or trivial group)", ""};
    a.crosscap = a.genus;
    return a;
  }
  const auto p = profile(G);
  const bool two = p.primes.size() == 2;
  if (two) {
    const auto p1 = p.primes[0], p2 = p.primes[1];
    const auto n1 = p.orders[0], e1 = p.exponents[0], e2 = p.exponents[1];
    std::string planar;
    if (p1 == 2 && n1 == 2 && e2 == p2) planar = "planar: Z2 x Q with Q of prime exponent";
    else if (p1 == 2 && e1 == 2 && p.orders[1] == 3) planar = "planar: Z2^k x Z3";
    else if (p1 == 3 && n1 == 3 && e2 == p2) planar = "planar: Z3 x Q with Q of prime exponent";
    else if (p1 == 2 && p.orders[1] == 3 && iso_to(p.sylow[0], "Z4")) planar = "planar: Z12";
    else if (p1 == 2 && p.orders[1] == 3 && iso_to(p.sylow[0], "D8")) planar = "planar: D8 x Z3";
    if (!planar.empty()) {
      a.genus = {0, planar, ""};
      a.crosscap = a.genus;
      return a;
    }
  }
  const bool p2_is_z3 = two && p.primes[0] == 2 && p.orders[1] == 3;
  bool c1 = false, c2 = false, c3 = false;
  if (p2_is_z3) {
    c1 = check_condition(p.sylow[0], Condition::C1).holds;
    c2 = check_condition(p.sylow[0], Condition::C2).holds;
    c3 = check_condition(p.sylow[0], Condition::C3).holds;
  }
  const auto ge3 = ge3_case(G, p);
  // Genus.
  a.genus = ge3;
  for (const char* d : {"Z18", "Z20", "Z2^2xZ5", "Z28", "Z2^2xZ7"})
    if (iso_to(G, d)) a.genus = {1, std::string("genus-1 family: ") + d, ""};
  if (c1) a.genus = {1, "genus-1 family: P x Z3 with P satisfying C1", ""};
  for (const char* d : {"Z35", "Z4xZ3^2", "Z2^2xZ3^2", "Z2^2xZ11", "Z44"})
    if (iso_to(G, d)) a.genus = {2, std::string("genus-2 family: ") + d, ""};
  if (c2) a.genus = {2, "genus-2 family: P x Z3 with P satisfying C2", ""};
  if (c3) a.genus = {2, "genus-2 family: P x Z3 with P satisfying C3", ""};
  // Cross-cap.
  a.crosscap = ge3;
  for (const char* d : {"Z20", "Z2^2xZ5"})
    if (iso_to(G, d)) a.crosscap = {1, std::string("cross-cap-1 family: ") + d, ""};
  for (const char* d : {"Z18", "Z28", "Z2^2xZ7"})
    if (iso_to(G, d)) a.crosscap = {2, std::string("cross-cap-2 family: ") + d, ""};
  if (c1) a.crosscap = {2, "cross-cap-2 family: P x Z3 with P satisfying C1", ""};
  if (a.crosscap.value == kGE3 && a.genus.value <= 2) {
    // Genus at most 2 but outside the cross-cap <= 2 list.
    static const std::vector<std::pair<const char*, const char*>> known{
        {"Z35", "K_{4,6}"}, {"Z4xZ3^2", "K_{3,8} subgraph"}, {"Z2^2xZ3^2", "K_{3,8}"}, {"Z2^2xZ11", "K_{3,10}"}, {"Z44", "K_{3,10} subgraph"}};
    a.crosscap.basis = "genus at most 2 but outside the cross-cap <= 2 families";
    a.crosscap.witness = "";
    for (auto [d, w] : known)
      if (iso_to(G, d)) a.crosscap.witness = w;
    if (c3) a.crosscap.witness = "K_{6,4} subgraph";
    if (c2) a.crosscap.witness = "order-4 maximal cyclic pairs block an embedding in N_2";
  }
  return a;
}

}  // namespace detail

/// Predicted genus class of D(G). Throws NotNilpotent.
inline GenusClass classify_genus(const GroupTable& G) { return detail::analyze(G).genus; }

/// Predicted cross-cap class of D(G). Throws NotNilpotent.
inline GenusClass classify_crosscap(const GroupTable& G) { return detail::analyze(G).crosscap; }

}  // namespace diffgraph
