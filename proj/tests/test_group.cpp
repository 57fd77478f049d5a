#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "diffgraph/catalog.hpp"
#include "diffgraph/group.hpp"
#include "diffgraph/isomorphism.hpp"
#include "diffgraph/numtheory.hpp"

using namespace diffgraph;

namespace {

std::size_t count_order(const GroupTable& G, std::uint32_t o) {
  std::size_t c = 0;
  for (auto x : G.orders()) c += x == o;
  return c;
}

// Elements of a product Z_a x Z_b ... are indexed with the first factor
// varying fastest.
Element product_index(const std::vector<std::uint32_t>& sizes, const std::vector<std::uint32_t>& coords) {
  Element idx = 0, scale = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    idx += coords[i] * scale;
    scale *= sizes[i];
  }
  return idx;
}

const std::vector<GroupTable>& catalog_tables() {
  static const std::vector<GroupTable> tables = [] {
    std::vector<GroupTable> v;
    for (const auto& e : builtin_catalog(100)) v.push_back(e.table());
    return v;
  }();
  return tables;
}

const char* kQ8Table =
    "# Q8: 0=1 1=-1 2=i 3=-i 4=j 5=-j 6=k 7=-k\n"
    "8\n"
    "0 1 2 3 4 5 6 7\n"
    "1 0 3 2 5 4 7 6\n"
    "2 3 1 0 6 7 5 4\n"
    "3 2 0 1 7 6 4 5\n"
    "4 5 7 6 1 0 2 3\n"
    "5 4 6 7 0 1 3 2\n"
    "6 7 4 5 3 2 1 0\n"
    "7 6 5 4 2 3 0 1\n";

const char* kS3Table =
    "6\n"
    "0 1 2 3 4 5\n"
    "1 2 0 4 5 3\n"
    "2 0 1 5 3 4\n"
    "3 5 4 0 2 1\n"
    "4 3 5 1 0 2\n"
    "5 4 3 2 1 0\n";

}  // namespace

TEST(BuildGroup, TrivialGroup) {
  const auto G = build_group("Z1");
  EXPECT_EQ(G.order(), 1u);
  EXPECT_EQ(exponent(G), 1u);
}

TEST(BuildGroup, QuaternionOrders) {
  const auto G = build_group("Q8");
  EXPECT_EQ(G.order(), 8u);
  EXPECT_EQ(exponent(G), 4u);
  EXPECT_EQ(count_order(G, 2), 1u);
}

TEST(BuildGroup, ProductSylowOrders) {
  const auto G = build_group("Z4 x Z2 x Z3");
  EXPECT_EQ(G.order(), 24u);
  ASSERT_TRUE(is_nilpotent(G));
  const auto S = sylow_decomposition(G);
  ASSERT_EQ(S.primes, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(S.components[0].order(), 8u);
  EXPECT_EQ(S.components[1].order(), 3u);
}

TEST(BuildGroup, DescriptorGrammar) {
  EXPECT_EQ(build_group("z2 X z3").order(), 6u);
  EXPECT_EQ(build_group("Z2^3xZ3").order(), 24u);
  EXPECT_EQ(build_group("D8").order(), 8u);
  EXPECT_EQ(build_group("SD16").order(), 16u);
  EXPECT_THROW(build_group("Q4"), ParseError);
  EXPECT_THROW(build_group("SD8"), ParseError);
  EXPECT_THROW(build_group("D6"), ParseError);
  EXPECT_THROW(build_group("Zx"), ParseError);
  EXPECT_THROW(build_group(""), ParseError);
}

TEST(BuildGroup, FamiliesAreNonIsomorphic) {
  for (const char* a : {"D16", "Q16", "SD16", "Z16", "Z8xZ2"})
    for (const char* b : {"D16", "Q16", "SD16", "Z16", "Z8xZ2"})
      EXPECT_EQ(group_isomorphic(build_group(a), build_group(b)).isomorphic, std::string(a) == b) << a << " " << b;
}

TEST(IngestTable, CyclicOfOrderTwo) {
  const auto G = ingest_table("2\n0 1\n1 0\n");
  EXPECT_EQ(G.order(), 2u);
}

TEST(IngestTable, LatinSquareViolation) {
  EXPECT_THROW(ingest_table("2\n0 1\n1 1\n"), InvalidTable);
}

TEST(IngestTable, QuaternionTable) {
  const auto G = ingest_table(kQ8Table);
  EXPECT_EQ(exponent(G), 4u);
  EXPECT_TRUE(group_isomorphic(G, build_group("Q8")).isomorphic);
}

TEST(IngestTable, Errors) {
  EXPECT_THROW(ingest_table("2\n1 0\n0 1\n"), InvalidTable);         // identity not at 0
  EXPECT_THROW(ingest_table("3\n0 1 2\n1 2 0\n"), ParseError);       // missing row
  EXPECT_THROW(ingest_table("2\n0 1\n1 x\n"), ParseError);           // not a number
  EXPECT_THROW(ingest_table("2\n0 1\n1 5\n"), InvalidTable);         // out of range
  // Latin square but not associative.
  const char* bad =
      "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  EXPECT_THROW(ingest_table(bad), InvalidTable);
}

TEST(IngestTable, RoundTrip) {
  const auto G = build_group("D8xZ3");
  const auto H = ingest_table(table_to_text(G));
  EXPECT_EQ(H.table(), G.table());
}

TEST(ElementOrder, Examples) {
  const auto Z12 = build_group("Z12");
  EXPECT_EQ(element_order(Z12, 4), 3u);
  EXPECT_EQ(element_order(Z12, 0), 1u);
  const auto Q = ingest_table(kQ8Table);
  EXPECT_EQ(element_order(Q, 2), 4u);
  EXPECT_THROW(element_order(Q, 8), std::out_of_range);
}

TEST(ElementOrder, DividesGroupOrder) {
  for (const auto& G : catalog_tables())
    for (Element g = 0; g < G.order(); ++g) EXPECT_EQ(G.order() % G.element_order(g), 0u);
}

TEST(Exponent, Examples) {
  EXPECT_EQ(exponent(build_group("Z2^3")), 2u);
  EXPECT_EQ(exponent(build_group("Z4xZ2")), 4u);
  EXPECT_EQ(exponent(build_group("Z12")), 12u);
}

TEST(CyclicSubgroups, Examples) {
  const auto z12 = cyclic_subgroups(build_group("Z12"));
  EXPECT_EQ(z12.size(), 6u);
  EXPECT_EQ(cyclic_subgroup_counts(z12), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}}));
  EXPECT_EQ(cyclic_subgroup_counts(cyclic_subgroups(build_group("Q8"))), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 3}}));
  EXPECT_EQ(cyclic_subgroup_counts(cyclic_subgroups(build_group("Z2^2"))), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}}));
}

TEST(CyclicSubgroups, GeneratorsGenerate) {
  for (const auto& G : catalog_tables()) {
    if (G.order() > 48) continue;
    for (const auto& H : cyclic_subgroups(G)) {
      ASSERT_TRUE(H.generator.has_value());
      EXPECT_EQ(cyclic_closure(G, *H.generator).to_vector(), H.members.to_vector());
    }
  }
}

TEST(MaximalCyclic, Examples) {
  const auto z12 = maximal_cyclic_subgroups(build_group("Z12"));
  ASSERT_EQ(z12.size(), 1u);
  EXPECT_EQ(z12[0].order(), 12u);

  const auto q8 = maximal_cyclic_subgroups(build_group("Q8"));
  ASSERT_EQ(q8.size(), 3u);
  DynamicBitset common = q8[0].members;
  for (const auto& H : q8) {
    EXPECT_EQ(H.order(), 4u);
    common &= H.members;
  }
  EXPECT_EQ(common.count(), 2u);

  const auto d8 = maximal_cyclic_subgroups(build_group("D8"));
  ASSERT_EQ(d8.size(), 5u);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& H : d8) ++by_order[H.order()];
  EXPECT_EQ(by_order, (std::map<std::size_t, std::size_t>{{2, 4}, {4, 1}}));
}

TEST(IntersectionPattern, Examples) {
  const auto q8 = intersection_pattern(maximal_cyclic_subgroups(build_group("Q8")));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(q8[i][j], i == j ? 4u : 2u);

  const auto v4 = intersection_pattern(maximal_cyclic_subgroups(build_group("Z2^2")));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(v4[i][j], i == j ? 2u : 1u);

  const auto G = build_group("Z4xZ2");
  const Element a = product_index({4, 2}, {1, 0}), b = product_index({4, 2}, {1, 1});
  std::vector<Subgroup> two{{&G, cyclic_closure(G, a), a}, {&G, cyclic_closure(G, b), b}};
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(intersection_pattern(two)[0][1], 2u);

  const auto other = build_group("Z2");
  std::vector<Subgroup> mixed{cyclic_subgroups(G)[0], cyclic_subgroups(other)[0]};
  EXPECT_THROW(intersection_pattern(mixed), std::invalid_argument);
}

TEST(Sylow, Examples) {
  const auto S = sylow_decomposition(build_group("Z12"));
  EXPECT_EQ(S.components[0].order(), 4u);
  EXPECT_EQ(S.components[1].order(), 3u);

  const auto G = build_group("Q8xZ3");
  const auto T = sylow_decomposition(G);
  EXPECT_TRUE(group_isomorphic(subgroup_table(G, T.components[0].members), build_group("Q8")).isomorphic);
  EXPECT_TRUE(group_isomorphic(subgroup_table(G, T.components[1].members), build_group("Z3")).isomorphic);

  const auto S3 = ingest_table(kS3Table);
  EXPECT_FALSE(is_nilpotent(S3));
  EXPECT_THROW(sylow_decomposition(S3), NotNilpotent);
}

TEST(Sylow, ProjectionIsAnIsomorphism) {
  for (const auto& G : catalog_tables()) {
    if (G.order() > 64) continue;
    const auto S = sylow_decomposition(G);
    std::set<std::vector<Element>> images;
    for (Element a = 0; a < G.order(); ++a) {
      images.insert(S.projection[a]);
      for (Element b = 0; b < G.order(); ++b) {
        const auto ab = S.projection[G.mul(a, b)];
        for (std::size_t i = 0; i < S.primes.size(); ++i)
          ASSERT_EQ(ab[i], G.mul(S.projection[a][i], S.projection[b][i])) << G.source();
      }
    }
    EXPECT_EQ(images.size(), G.order());
  }
}

TEST(Eppo, Examples) {
  EXPECT_TRUE(is_eppo(build_group("Q8")));
  EXPECT_FALSE(is_eppo(build_group("Z6")));
  EXPECT_FALSE(is_eppo(build_group("Z2^2xZ3")));
}

TEST(LcmWitness, Examples) {
  const auto Z12 = build_group("Z12");
  EXPECT_EQ(Z12.element_order(lcm_witness(Z12, 4, 6)), 12u);
  const auto V = build_group("Z2^2");
  EXPECT_EQ(V.element_order(lcm_witness(V, 2, 2)), 2u);
  const auto G = build_group("Q8xZ3");
  EXPECT_EQ(G.element_order(lcm_witness(G, 4, 3)), 12u);
  EXPECT_THROW(lcm_witness(G, 8, 3), std::invalid_argument);
  EXPECT_THROW(lcm_witness(ingest_table(kS3Table), 2, 3), NotNilpotent);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(group_isomorphic(build_group("Z6"), build_group("Z2xZ3")).isomorphic);
  EXPECT_FALSE(group_isomorphic(build_group("Z4"), build_group("Z2^2")).isomorphic);
  EXPECT_FALSE(group_isomorphic(build_group("D8"), build_group("Q8")).isomorphic);
  EXPECT_FALSE(group_isomorphic(build_group("Z6"), build_group("Z5")).isomorphic);
  EXPECT_THROW(group_isomorphic(build_group("Z200"), build_group("Z200")), CapExceeded);
}

TEST(Isomorphism, WitnessIsAnIsomorphism) {
  const auto A = build_group("D8xZ3");
  std::vector<Element> perm(A.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  const auto B = A.relabeled(perm, "shuffled");
  const auto r = group_isomorphic(A, B);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(is_isomorphism(A, B, *r.map));
}

TEST(Isomorphism, CoprimeCyclicProducts) {
  for (std::uint32_t m = 2; m <= 10; ++m)
    for (std::uint32_t n = 2; n <= 10; ++n) {
      const bool coprime = std::gcd(m, n) == 1;
      const auto prod = build_group("Z" + std::to_string(m) + "xZ" + std::to_string(n));
      EXPECT_EQ(group_isomorphic(prod, build_group("Z" + std::to_string(m * n))).isomorphic, coprime) << m << "," << n;
    }
}

TEST(CatalogProperties, CoprimeOrdersCommute) {
  for (const auto& G : catalog_tables())
    for (Element x = 0; x < G.order(); ++x)
      for (Element y = 0; y < G.order(); ++y)
        if (std::gcd(G.element_order(x), G.element_order(y)) == 1) ASSERT_EQ(G.mul(x, y), G.mul(y, x)) << G.source();
}

TEST(CatalogProperties, ExponentPSquaredDichotomy) {
  for (const auto& G : catalog_tables()) {
    if (!is_p_group(G)) continue;
    const auto p = nt::factorize(G.order())[0].first;
    if (exponent(G) != p * p) continue;
    std::vector<Subgroup> sq;
    for (const auto& H : cyclic_subgroups(G))
      if (H.order() == p * p) sq.push_back(H);
    if (sq.size() == 1) continue;
    bool found = false;
    for (std::size_t i = 0; i < sq.size() && !found; ++i)
      for (std::size_t j = i + 1; j < sq.size() && !found; ++j) found = sq[i].members.intersection_count(sq[j].members) == p;
    EXPECT_TRUE(found) << G.source();
  }
}

TEST(CatalogProperties, CyclicSubgroupCongruences) {
  // Maximal class 2-groups are dihedral, quaternion and semidihedral of order
  // at least 8 (plus Z2^2 in order 4); the congruences hold for the others.
  auto maximal_class = [](const GroupTable& G) {
    for (const char* d : {"Z2^2", "D8", "Q8", "D16", "Q16", "SD16"})
      if (G.order() == build_group(d).order() && group_isomorphic(G, build_group(d)).isomorphic) return true;
    return false;
  };
  for (const auto& G : catalog_tables()) {
    if (!is_p_group(G) || maximal_class(G)) continue;
    const auto p = nt::factorize(G.order())[0].first;
    if (exponent(G) == G.order()) continue;  // cyclic
    const auto c = cyclic_subgroup_counts(cyclic_subgroups(G));
    EXPECT_EQ(c.at(p) % (p * p), (1 + p) % (p * p)) << G.source();
    for (const auto& [o, k] : c)
      if (o >= p * p) EXPECT_EQ(k % p, 0u) << G.source() << " order " << o;
  }
}

TEST(CatalogProperties, UniqueCyclicSubgroupFamilies) {
  for (const auto& G : catalog_tables()) {
    if (!is_p_group(G)) continue;
    const auto c = cyclic_subgroup_counts(cyclic_subgroups(G));
    bool some_one = false;
    for (const auto& [o, k] : c) some_one = some_one || (o > 1 && k == 1);
    if (!some_one) continue;
    const auto n = static_cast<std::uint32_t>(G.order());
    std::vector<std::string> shapes{"Z" + std::to_string(n)};
    if (n >= 8) shapes.insert(shapes.end(), {"D" + std::to_string(n), "Q" + std::to_string(n)});
    if (n >= 16) shapes.push_back("SD" + std::to_string(n));
    bool matched = false;
    for (const auto& s : shapes)
      if (nt::is_power_of_two(n) || s[0] == 'Z') matched = matched || group_isomorphic(G, build_group(s)).isomorphic;
    EXPECT_TRUE(matched) << G.source();
  }
}

TEST(Catalog, SizeAndDeduplication) {
  const auto cat = builtin_catalog(200);
  EXPECT_GT(cat.size(), 200u);
  std::set<std::string> names;
  for (const auto& e : cat) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  EXPECT_THROW(builtin_catalog(201), std::invalid_argument);
  // No duplicate isomorphism classes among the small entries.
  const auto small = builtin_catalog(48);
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j)
      if (small[i].order == small[j].order)
        EXPECT_FALSE(group_isomorphic(small[i].table(), small[j].table()).isomorphic) << small[i].name << " " << small[j].name;
}
