#pragma once

// Finite groups as dense Cayley tables.
//
// Elements are indices 0..n-1 with the identity fixed at 0. A GroupTable is
// immutable once constructed; every query below is a pure function of it.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diffgraph/bitset.hpp"
#include "diffgraph/error.hpp"
#include "diffgraph/numtheory.hpp"

namespace diffgraph {

using Element = std::uint32_t;

class GroupTable {
 public:
  /// Builds a table and verifies every group axiom. Associativity is checked
  /// exhaustively up to `full_assoc_limit` elements, by 10^6 random triples
  /// beyond that.
  static GroupTable validated(std::size_t n, std::vector<Element> mult, std::vector<std::string> names = {},
                              std::string source = {}, std::size_t full_assoc_limit = 256);

  /// Trusted constructor for tables produced by the algebraic builders.
  static GroupTable trusted(std::size_t n, std::vector<Element> mult, std::vector<std::string> names,
                            std::string source) {
    return GroupTable(n, std::move(mult), std::move(names), std::move(source));
  }

  std::size_t order() const { return n_; }
  Element mul(Element a, Element b) const { return mult_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::uint32_t element_order(Element g) const {
    if (g >= n_) throw std::out_of_range("element index " + std::to_string(g) + " out of range");
    return orders_[g];
  }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  Element power(Element g, std::uint64_t k) const {
    Element r = 0;
    Element base = g;
    while (k) {
      if (k & 1U) r = mul(r, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return r;
  }
  const std::string& name(Element g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& source() const { return source_; }
  const std::vector<Element>& table() const { return mult_; }

  /// Order spectrum: element order -> number of elements of that order.
  std::map<std::uint32_t, std::size_t> order_spectrum() const {
    std::map<std::uint32_t, std::size_t> s;
    for (auto o : orders_) ++s[o];
    return s;
  }

  /// Relabels elements by `perm` (new index of old element i is perm[i]);
  /// perm[0] must be 0.
  GroupTable relabeled(const std::vector<Element>& perm, std::string source) const;

 private:
  GroupTable(std::size_t n, std::vector<Element> mult, std::vector<std::string> names, std::string source)
      : n_(n), mult_(std::move(mult)), names_(std::move(names)), source_(std::move(source)) {
    if (names_.size() != n_) {
      names_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) names_[i] = std::to_string(i);
    }
    derive();
  }
  void derive();

  std::size_t n_ = 0;
  std::vector<Element> mult_;
  std::vector<std::string> names_;
  std::string source_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
};

inline void GroupTable::derive() {
  inverse_.assign(n_, 0);
  orders_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    std::uint32_t k = 1;
    Element x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > n_) break;
    }
    orders_[a] = k;
  }
}

inline GroupTable GroupTable::validated(std::size_t n, std::vector<Element> mult, std::vector<std::string> names,
                                        std::string source, std::size_t full_assoc_limit) {
  if (n == 0) throw InvalidTable("group order must be positive");
  if (mult.size() != n * n) throw InvalidTable("table has wrong number of entries");
  auto at = [&](std::size_t i, std::size_t j) { return mult[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) >= n)
        throw InvalidTable("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) throw InvalidTable("identity is not at index 0 (row/column " + std::to_string(i) + ")");
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) throw InvalidTable("not a Latin square: row " + std::to_string(i) + " repeats " + std::to_string(at(i, j)));
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) throw InvalidTable("not a Latin square: column " + std::to_string(i) + " repeats " + std::to_string(at(j, i)));
    }
  }
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw InvalidTable("associativity fails for triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
    }
  };
  if (n <= full_assoc_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    for (int t = 0; t < 1000000; ++t) check(d(rng), d(rng), d(rng));
  }
  // Latin square plus identity gives a unique right inverse; make sure it is two-sided.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == 0 && at(b, a) != 0)
        throw InvalidTable("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
  return GroupTable(n, std::move(mult), std::move(names), std::move(source));
}

inline GroupTable GroupTable::relabeled(const std::vector<Element>& perm, std::string source) const {
  std::vector<Element> m(n_ * n_);
  std::vector<std::string> names(n_);
  for (Element a = 0; a < n_; ++a) {
    names[perm[a]] = names_[a];
    for (Element b = 0; b < n_; ++b) m[perm[a] * n_ + perm[b]] = perm[mul(a, b)];
  }
  return GroupTable::validated(n_, std::move(m), std::move(names), std::move(source));
}

// ---------------------------------------------------------------------------
// Descriptors

enum class Family { Cyclic, Dihedral, Quaternion, Semidihedral };

struct FamilyAtom {
  Family family;
  std::uint32_t order;  // group order of the atom (D8 has order 8)

  std::string to_string() const {
    switch (family) {
      case Family::Cyclic: return "Z" + std::to_string(order);
      case Family::Dihedral: return "D" + std::to_string(order);
      case Family::Quaternion: return "Q" + std::to_string(order);
      case Family::Semidihedral: return "SD" + std::to_string(order);
    }
    return {};
  }
};

struct GroupDescriptor {
  std::vector<FamilyAtom> factors;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " x ";
      s += factors[i].to_string();
    }
    return s;
  }
  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& f : factors) o *= f.order;
    return o;
  }
};

/// Checks an atom's parameter against its family's legal range.
inline void validate_atom(const FamilyAtom& a) {
  const auto o = a.order;
  switch (a.family) {
    case Family::Cyclic:
      if (o < 1) throw ParseError("Z(n) needs n >= 1");
      break;
    case Family::Dihedral:
      if (o < 4 || !nt::is_power_of_two(o)) throw ParseError("D(m) needs m = 2^k >= 4, got " + std::to_string(o));
      break;
    case Family::Quaternion:
      if (o < 8 || !nt::is_power_of_two(o)) throw ParseError("Q(m) needs m = 2^k >= 8, got " + std::to_string(o));
      break;
    case Family::Semidihedral:
      if (o < 16 || !nt::is_power_of_two(o)) throw ParseError("SD(m) needs m = 2^k >= 16, got " + std::to_string(o));
      break;
  }
}

/// Parses "Z4 x Z2 x Z3", "q8xz3", "D8 x Z2 x Z3", ... Atoms are separated by
/// 'x'; case and whitespace are ignored. "Z2^3" is shorthand for Z2 x Z2 x Z2.
inline GroupDescriptor parse_descriptor(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s.empty()) throw ParseError("empty group descriptor");
  GroupDescriptor d;
  std::size_t i = 0;
  auto read_number = [&](const char* what) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError(std::string("expected number after ") + what + " in '" + std::string(text) + "'");
    if (i - start > 9) throw ParseError("number too large in '" + std::string(text) + "'");
    return static_cast<std::uint32_t>(std::stoul(s.substr(start, i - start)));
  };
  while (true) {
    FamilyAtom atom{};
    if (s.compare(i, 2, "SD") == 0) {
      i += 2;
      atom = {Family::Semidihedral, read_number("SD")};
    } else if (i < s.size() && s[i] == 'Z') {
      ++i;
      atom = {Family::Cyclic, read_number("Z")};
    } else if (i < s.size() && s[i] == 'D') {
      ++i;
      atom = {Family::Dihedral, read_number("D")};
    } else if (i < s.size() && s[i] == 'Q') {
      ++i;
      atom = {Family::Quaternion, read_number("Q")};
    } else {
      throw ParseError("unknown atom at position " + std::to_string(i) + " in '" + std::string(text) + "'");
    }
    validate_atom(atom);
    std::uint32_t repeat = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      repeat = read_number("^");
      if (repeat == 0) throw ParseError("zero repeat count in '" + std::string(text) + "'");
    }
    for (std::uint32_t r = 0; r < repeat; ++r) d.factors.push_back(atom);
    if (i == s.size()) break;
    if (s[i] != 'X') throw ParseError("expected 'x' at position " + std::to_string(i) + " in '" + std::string(text) + "'");
    ++i;
    if (i == s.size()) throw ParseError("dangling 'x' in '" + std::string(text) + "'");
  }
  return d;
}

namespace detail {

inline GroupTable cyclic_table(std::uint32_t n) {
  std::vector<Element> m(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) m[a * n + b] = (a + b) % n;
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) names[a] = std::to_string(a);
  return GroupTable::trusted(n, std::move(m), std::move(names), "Z" + std::to_string(n));
}

// Metacyclic 2-groups <x, y : x^N = 1, y^-1 x y = x^r, y^2 = x^s> with
// element x^a y^b stored at index a + N*b.
inline GroupTable metacyclic_table(std::uint32_t order, std::uint32_t r, std::uint32_t y_squared_exp,
                                   const std::string& label) {
  const std::uint32_t N = order / 2;
  std::vector<Element> m(static_cast<std::size_t>(order) * order);
  auto idx = [N](std::uint32_t a, std::uint32_t b) { return static_cast<Element>(a % N + N * b); };
  for (std::uint32_t b = 0; b < 2; ++b) {
    for (std::uint32_t a = 0; a < N; ++a) {
      for (std::uint32_t d = 0; d < 2; ++d) {
        for (std::uint32_t c = 0; c < N; ++c) {
          // x^a y^b x^c y^d = x^(a + c r^b) y^(b+d), with y^2 = x^s
          std::uint64_t e = a + static_cast<std::uint64_t>(c) * (b ? r : 1);
          std::uint32_t yb = b + d;
          if (yb == 2) {
            e += y_squared_exp;
            yb = 0;
          }
          m[idx(a, b) * order + idx(c, d)] = idx(static_cast<std::uint32_t>(e % N), yb);
        }
      }
    }
  }
  std::vector<std::string> names(order);
  for (std::uint32_t b = 0; b < 2; ++b)
    for (std::uint32_t a = 0; a < N; ++a) {
      std::string n;
      if (a == 0 && b == 0) n = "e";
      if (a == 1) n = "x";
      if (a > 1) n = "x^" + std::to_string(a);
      if (b) n += "y";
      names[idx(a, b)] = n;
    }
  return GroupTable::trusted(order, std::move(m), std::move(names), label);
}

inline GroupTable atom_table(const FamilyAtom& a) {
  validate_atom(a);
  const std::uint32_t N = a.order / 2;
  switch (a.family) {
    case Family::Cyclic: return cyclic_table(a.order);
    case Family::Dihedral: return metacyclic_table(a.order, N - 1, 0, a.to_string());
    case Family::Quaternion: return metacyclic_table(a.order, N - 1, N / 2, a.to_string());
    case Family::Semidihedral: return metacyclic_table(a.order, N / 2 - 1, 0, a.to_string());
  }
  throw ParseError("unknown family");
}

}  // namespace detail

/// Direct product with the first factor varying fastest in the index.
inline GroupTable direct_product(const GroupTable& A, const GroupTable& B, std::string source = {}) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  std::vector<Element> m(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = x % na, xb = x / na;
    for (Element y = 0; y < n; ++y) {
      const Element ya = y % na, yb = y / na;
      m[x * n + y] = static_cast<Element>(A.mul(xa, ya) + na * B.mul(xb, yb));
    }
  }
  std::vector<std::string> names(n);
  auto strip = [](const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
  };
  for (Element x = 0; x < n; ++x) names[x] = "(" + strip(A.name(x % na)) + "," + B.name(x / na) + ")";
  if (source.empty()) source = A.source() + " x " + B.source();
  return GroupTable::trusted(n, std::move(m), std::move(names), std::move(source));
}

inline GroupTable build_group(const GroupDescriptor& d) {
  if (d.factors.empty()) throw ParseError("descriptor has no factors");
  if (d.order() > 100000) throw ParseError("group order " + std::to_string(d.order()) + " too large");
  GroupTable g = detail::atom_table(d.factors.front());
  for (std::size_t i = 1; i < d.factors.size(); ++i) g = direct_product(g, detail::atom_table(d.factors[i]));
  return GroupTable::trusted(g.order(), g.table(), g.names(), d.to_string());
}

inline GroupTable build_group(std::string_view descriptor) { return build_group(parse_descriptor(descriptor)); }

/// Parses the Cayley table file format: first non-comment line n, then n rows
/// of n 0-based indices. '#' starts a comment line.
inline GroupTable ingest_table(std::string_view text, std::string source = "<table>") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Element> m;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!n) {
      long long v = 0;
      std::string rest;
      if (!(ls >> v) || v <= 0 || (ls >> rest))
        throw ParseError("line " + std::to_string(lineno) + ": expected positive group order");
      n = static_cast<std::size_t>(v);
      if (*n > 4096) throw ParseError("line " + std::to_string(lineno) + ": group order too large");
      m.reserve(*n * *n);
      continue;
    }
    if (rows == *n) throw ParseError("line " + std::to_string(lineno) + ": more than n table rows");
    std::string tok;
    std::size_t cols = 0;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad entry '" + tok + "'");
      m.push_back(static_cast<Element>(v));
      ++cols;
    }
    if (cols != *n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(*n) + " entries, got " +
                       std::to_string(cols));
    ++rows;
  }
  if (!n) throw ParseError("empty table file");
  if (rows != *n) throw ParseError("expected " + std::to_string(*n) + " rows, got " + std::to_string(rows));
  return GroupTable::validated(*n, std::move(m), {}, std::move(source));
}

inline std::string table_to_text(const GroupTable& G) {
  std::ostringstream os;
  os << "# Cayley table of " << G.source() << "\n" << G.order() << "\n";
  for (Element a = 0; a < G.order(); ++a) {
    for (Element b = 0; b < G.order(); ++b) os << (b ? " " : "") << G.mul(a, b);
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
  const GroupTable* parent = nullptr;
  DynamicBitset members;
  std::optional<Element> generator;

  std::size_t order() const { return members.count(); }
  bool contains(Element g) const { return members.test(g); }
  std::vector<Element> elements() const {
    std::vector<Element> out;
    members.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
  }
};

inline DynamicBitset cyclic_closure(const GroupTable& G, Element g) {
  DynamicBitset s(G.order());
  Element x = 0;
  do {
    s.set(x);
    x = G.mul(x, g);
  } while (x != 0);
  return s;
}

/// Subgroup generated by a set of elements.
inline DynamicBitset generated_subgroup(const GroupTable& G, const std::vector<Element>& gens) {
  DynamicBitset s(G.order());
  std::vector<Element> stack{0};
  s.set(0);
  while (!stack.empty()) {
    Element h = stack.back();
    stack.pop_back();
    for (Element g : gens) {
      Element x = G.mul(h, g);
      if (!s.test(x)) {
        s.set(x);
        stack.push_back(x);
      }
    }
  }
  return s;
}

inline std::uint32_t element_order(const GroupTable& G, Element g) { return G.element_order(g); }

inline std::uint64_t exponent(const GroupTable& G) {
  std::uint64_t e = 1;
  for (auto o : G.orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

/// Every distinct cyclic subgroup once, sorted by order then by generator.
inline std::vector<Subgroup> cyclic_subgroups(const GroupTable& G) {
  std::vector<Subgroup> out;
  std::vector<char> covered(G.order(), 0);
  for (Element g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    Subgroup s{&G, cyclic_closure(G, g), g};
    const auto o = G.element_order(g);
    Element x = g;
    for (std::uint32_t k = 1; k <= o; ++k) {
      if (std::gcd(k, o) == 1) covered[x] = 1;
      x = G.mul(x, g);
    }
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

inline std::map<std::size_t, std::size_t> cyclic_subgroup_counts(const std::vector<Subgroup>& subs) {
  std::map<std::size_t, std::size_t> c;
  for (const auto& s : subs) ++c[s.order()];
  return c;
}

/// Cyclic subgroups not properly contained in another cyclic subgroup.
inline std::vector<Subgroup> maximal_cyclic_subgroups(const GroupTable& G) {
  auto all = cyclic_subgroups(G);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      if (all[j].order() > all[i].order() && all[j].order() % all[i].order() == 0 &&
          all[i].members.is_subset_of(all[j].members))
        maximal = false;
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

/// Symmetric matrix of pairwise intersection orders; diagonal holds orders.
inline std::vector<std::vector<std::size_t>> intersection_pattern(const std::vector<Subgroup>& subs) {
  for (const auto& s : subs)
    if (s.parent != subs.front().parent) throw std::invalid_argument("subgroups have different parent groups");
  std::vector<std::vector<std::size_t>> m(subs.size(), std::vector<std::size_t>(subs.size()));
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) m[i][j] = subs[i].members.intersection_count(subs[j].members);
  return m;
}

/// Cayley table of a subgroup, elements renumbered in increasing order of
/// their index in G (so the identity stays at 0).
inline GroupTable subgroup_table(const GroupTable& G, const DynamicBitset& members, std::string source = {}) {
  std::vector<Element> elems;
  std::vector<Element> local(G.order(), 0);
  members.for_each([&](std::size_t g) {
    local[g] = static_cast<Element>(elems.size());
    elems.push_back(static_cast<Element>(g));
  });
  if (elems.empty() || elems.front() != 0) throw std::invalid_argument("subgroup must contain the identity");
  const auto k = elems.size();
  std::vector<Element> mult(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = G.name(elems[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const Element x = G.mul(elems[i], elems[j]);
      if (!members.test(x)) throw std::invalid_argument("member set is not closed");
      mult[i * k + j] = local[x];
    }
  }
  return GroupTable::trusted(k, std::move(mult), std::move(names), source.empty() ? "subgroup of " + G.source() : source);
}

// ---------------------------------------------------------------------------
// Sylow structure

struct SylowDecomposition {
  std::vector<std::uint64_t> primes;
  std::vector<Subgroup> components;
  /// projection[g][i] is the component of g in the i-th Sylow subgroup.
  std::vector<std::vector<Element>> projection;
};

/// The set of p-elements of G.
inline DynamicBitset p_elements(const GroupTable& G, std::uint64_t p) {
  DynamicBitset s(G.order());
  for (Element g = 0; g < G.order(); ++g)
    if (nt::p_part(G.element_order(g), p) == G.element_order(g)) s.set(g);
  return s;
}

inline bool is_closed(const GroupTable& G, const DynamicBitset& s) {
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    s.for_each([&](std::size_t b) {
      if (ok && !s.test(G.mul(static_cast<Element>(a), static_cast<Element>(b)))) ok = false;
    });
  });
  return ok;
}

/// Nilpotency test: the p-elements form a subgroup (of full p-power order)
/// for every prime p dividing |G|.
inline bool is_nilpotent(const GroupTable& G) {
  for (auto [p, e] : nt::factorize(G.order())) {
    auto s = p_elements(G, p);
    if (s.count() != nt::p_part(G.order(), p) || !is_closed(G, s)) return false;
  }
  return true;
}

inline SylowDecomposition sylow_decomposition(const GroupTable& G) {
  SylowDecomposition d;
  for (auto [p, e] : nt::factorize(G.order())) {
    auto s = p_elements(G, p);
    if (s.count() != nt::p_part(G.order(), p) || !is_closed(G, s))
      throw NotNilpotent("the " + std::to_string(p) + "-elements of " + G.source() + " do not form a subgroup");
    d.primes.push_back(p);
    d.components.push_back(Subgroup{&G, std::move(s), std::nullopt});
  }
  d.projection.resize(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    const std::uint64_t m = G.element_order(g);
    auto& proj = d.projection[g];
    for (auto p : d.primes) {
      const std::uint64_t mp = nt::p_part(m, p);
      const std::uint64_t rest = m / mp;
      // exponent e = rest * (rest^-1 mod mp): g^e is the p-part of g
      const std::uint64_t e = mp == 1 ? 0 : rest * static_cast<std::uint64_t>(nt::mod_inverse(static_cast<std::int64_t>(rest % mp), static_cast<std::int64_t>(mp)));
      proj.push_back(G.power(g, e));
    }
  }
  return d;
}

inline bool is_p_group(const GroupTable& G) { return G.order() > 1 && nt::factorize(G.order()).size() == 1; }

inline bool is_eppo(const GroupTable& G) {
  return std::all_of(G.orders().begin(), G.orders().end(), [](auto o) { return nt::is_prime_power_or_one(o); });
}

/// An element of order lcm(s, t), built from prime-power parts of elements
/// of orders s and t (which commute across distinct Sylow subgroups).
inline Element lcm_witness(const GroupTable& G, std::uint64_t s, std::uint64_t t) {
  if (!is_nilpotent(G)) throw NotNilpotent(G.source() + " is not nilpotent");
  auto find = [&](std::uint64_t o) -> Element {
    for (Element g = 0; g < G.order(); ++g)
      if (G.element_order(g) == o) return g;
    throw std::invalid_argument(std::to_string(o) + " is not an element order of " + G.source());
  };
  const Element x = find(s), y = find(t);
  const std::uint64_t target = std::lcm(s, t);
  Element z = 0;
  for (auto [p, e] : nt::factorize(target)) {
    const std::uint64_t ps = nt::p_part(s, p), pt = nt::p_part(t, p);
    const Element src = ps >= pt ? x : y;
    const std::uint64_t o = ps >= pt ? s : t;
    z = G.mul(z, G.power(src, o / nt::p_part(o, p)));
  }
  if (G.element_order(z) != target) throw std::logic_error("lcm witness construction failed");
  return z;
}

}  // namespace diffgraph
