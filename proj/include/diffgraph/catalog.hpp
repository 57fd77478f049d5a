#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "diffgraph/group.hpp"
#include "diffgraph/isomorphism.hpp"

namespace diffgraph {

/// Short name such as "Z2^2xZ3" (equal adjacent atoms collapsed).
inline std::string compact_name(const GroupDescriptor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.factors.size();) {
    std::size_t j = i;
    while (j < d.factors.size() && d.factors[j].family == d.factors[i].family && d.factors[j].order == d.factors[i].order) ++j;
    if (!s.empty()) s += "x";
    s += d.factors[i].to_string();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

struct CatalogEntry {
  std::string name;
  GroupDescriptor descriptor;
  std::size_t order = 0;
  GroupTable table() const {
    const auto G = build_group(descriptor);
    return GroupTable::trusted(G.order(), G.table(), G.names(), name);
  }
};

inline const std::vector<std::string>& catalog_two_groups() {
  static const std::vector<std::string> v{"Z2",     "Z4",     "Z8",  "Z2^2", "Z2^3", "Z4xZ2", "Z4xZ4",  "Z4xZ2^2",
                                          "D8",     "D16",    "Q8",  "Q16",  "SD16", "D8xZ2", "Q8xZ2"};
  return v;
}

inline const std::vector<std::string>& catalog_odd_groups() {
  static const std::vector<std::string> v{"Z3", "Z9", "Z3^2", "Z5", "Z7", "Z11", "Z13", "Z25"};
  return v;
}

/// Built-in catalog up to `max_order` (at most 200): every Z(n), every listed
/// 2-group and odd group, and their products, with isomorphic duplicates
/// removed (the first name seen wins; cyclic names come first). Sorted by
/// (order, name).
inline std::vector<CatalogEntry> builtin_catalog(std::size_t max_order = 200) {
  if (max_order > 200) throw std::invalid_argument("catalog is limited to order 200");
  std::vector<GroupDescriptor> cand;
  for (std::uint32_t n = 1; n <= max_order; ++n) cand.push_back(GroupDescriptor{{{Family::Cyclic, n}}});
  for (const auto& t : catalog_two_groups()) cand.push_back(parse_descriptor(t));
  for (const auto& o : catalog_odd_groups()) cand.push_back(parse_descriptor(o));
  for (const auto& t : catalog_two_groups())
    for (const auto& o : catalog_odd_groups()) {
      auto d = parse_descriptor(t);
      for (const auto& f : parse_descriptor(o).factors) d.factors.push_back(f);
      cand.push_back(d);
    }
  struct Kept {
    CatalogEntry entry;
    GroupTable table;
  };
  std::vector<Kept> kept;
  for (const auto& d : cand) {
    if (d.order() > max_order) continue;
    auto G = build_group(d);
    bool dup = false;
    for (const auto& k : kept)
      if (k.entry.order == G.order() && group_isomorphic(k.table, G, 256).isomorphic) {
        dup = true;
        break;
      }
    if (dup) continue;
    CatalogEntry e{compact_name(d), d, G.order()};
    kept.push_back({std::move(e), std::move(G)});
  }
  std::vector<CatalogEntry> out;
  for (auto& k : kept) out.push_back(std::move(k.entry));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return out;
}

}  // namespace diffgraph
