#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bubblecross/perm_graph.hpp"

namespace bubblecross {
namespace {

TEST(BuildBn, SizesRegularityConnectivity) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = build_bn(n);
    const Rank count = factorial(n);
    ASSERT_EQ(g.vertices.size(), count);
    ASSERT_EQ(g.edges.size(), count * static_cast<Rank>(n - 1) / 2);
    for (auto d : degrees(g)) ASSERT_EQ(d, static_cast<std::size_t>(n - 1));
    ASSERT_TRUE(is_connected(g)) << n;
    ASSERT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end()));
  }
}

TEST(BuildBn, SmallCases) {
  const auto b2 = build_bn(2);
  EXPECT_EQ(b2.vertices.size(), 2u);
  EXPECT_EQ(b2.edges.size(), 1u);

  const auto b4 = build_bn(4);
  EXPECT_EQ(b4.vertices.size(), 24u);
  EXPECT_EQ(b4.edges.size(), 36u);
}

// Walk B_3 from 123 without backtracking: a single 6-cycle returns to the
// start after exactly six steps, visiting every vertex once.
TEST(BuildBn, B3IsASixCycle) {
  const auto g = build_bn(3);
  ASSERT_EQ(g.vertices.size(), 6u);
  ASSERT_EQ(g.edges.size(), 6u);
  const auto adj = adjacency_lists(g);
  std::size_t prev = adj.size();
  std::size_t cur = 0;
  std::set<std::size_t> seen;
  for (int step = 0; step < 6; ++step) {
    seen.insert(cur);
    ASSERT_EQ(adj[cur].size(), 2u);
    const std::size_t next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  }
  EXPECT_EQ(cur, 0u);
  EXPECT_EQ(seen.size(), 6u);
}

TEST(BuildBn, DimensionGuard) {
  EXPECT_THROW(build_bn(1), dimension_out_of_range);
  EXPECT_THROW(build_bn(11), dimension_out_of_range);
  EXPECT_THROW(build_bn(12), dimension_out_of_range);
  EXPECT_THROW(build_bn(13, GraphLimits{13}), dimension_out_of_range);
}

TEST(Patterns, PatternOf) {
  EXPECT_EQ(pattern_of(Permutation::parse("125634")), (Pattern4{1, 2, 3, 4}));
  EXPECT_EQ(pattern_of(Permutation::parse("563412")), (Pattern4{3, 4, 1, 2}));
  EXPECT_EQ(pattern_of(Permutation::parse("214365")), (Pattern4{2, 1, 4, 3}));
  EXPECT_THROW(pattern_of(Permutation::parse("321")), invalid_input);
}

TEST(Patterns, ClassesPartitionAllPatterns) {
  const auto classes = pattern_classes();
  std::set<Pattern4> all;
  for (const auto& c : classes)
    for (const auto& p : c.member_patterns) all.insert(p);
  EXPECT_EQ(all.size(), 24u);
  const std::array<Pattern4, 4> canonical{
      Pattern4{1, 2, 3, 4}, Pattern4{1, 2, 4, 3}, Pattern4{1, 4, 2, 3}, Pattern4{4, 1, 2, 3}};
  EXPECT_EQ(classes[kCanonicalClass].member_patterns, canonical);
}

TEST(Patterns, Membership) {
  EXPECT_TRUE(in_bprime(Permutation::parse("125634")));
  EXPECT_FALSE(in_bprime(Permutation::parse("563412")));
  EXPECT_THROW(in_bprime(Permutation::parse("213")), invalid_input);
}

// The four-pattern definition coincides with "1, 2, 3 appear in increasing order".
TEST(Patterns, MembershipEqualsIncreasingOneTwoThree) {
  for (int n = 4; n <= 7; ++n) {
    Rank members = 0;
    for (Rank r = 0; r < factorial(n); ++r) {
      const auto p = Permutation::unrank(n, r);
      const bool increasing = p.position_of(1) < p.position_of(2) && p.position_of(2) < p.position_of(3);
      ASSERT_EQ(in_bprime(p), increasing) << p.label();
      members += increasing;
    }
    EXPECT_EQ(members, factorial(n) / 6) << n;
  }
}

TEST(BuildBprime, CoreCounts) {
  const auto g6 = build_bprime(6);
  EXPECT_EQ(g6.core_vertex_count, 120u);
  const auto g7 = build_bprime(7);
  EXPECT_EQ(g7.core_vertex_count, 840u);
}

TEST(BuildBprime, CoreVerticesKeepFullDegreeAndEdgesTouchCore) {
  for (int n : {6, 7}) {
    const auto g = build_bprime(n);
    const auto deg = degrees(g);
    std::size_t core_seen = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (in_bprime(g.label(i))) {
        ++core_seen;
        ASSERT_EQ(deg[i], static_cast<std::size_t>(n - 1));
      }
    }
    EXPECT_EQ(core_seen, g.core_vertex_count);
    for (const Edge& e : g.edges) {
      const auto u = Permutation::unrank(n, e.u);
      const auto v = Permutation::unrank(n, e.v);
      ASSERT_TRUE(adjacent_in_bn(u, v));
      ASSERT_TRUE(in_bprime(u) || in_bprime(v));
    }
    const auto unique_edges = std::set<Edge>(g.edges.begin(), g.edges.end());
    EXPECT_EQ(unique_edges.size(), g.edges.size());
  }
}

TEST(Planarity, KnownGraphs) {
  std::vector<std::pair<std::size_t, std::size_t>> k5;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  EXPECT_FALSE(is_planar(5, k5));
  k5.pop_back();
  EXPECT_TRUE(is_planar(5, k5));

  std::vector<std::pair<std::size_t, std::size_t>> k33;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) k33.emplace_back(i, j);
  EXPECT_FALSE(is_planar(6, k33));
}

TEST(Planarity, SmallBubbleSortGraphs) {
  EXPECT_TRUE(is_planar(build_bn(2)));
  EXPECT_TRUE(is_planar(build_bn(3)));
  EXPECT_TRUE(is_planar(build_bn(4)));
  // Bipartite, so a planar embedding would allow at most 2V - 4 = 236 edges; B_5 has 240.
  const auto b5 = build_bn(5);
  EXPECT_GT(b5.edges.size(), 2 * b5.vertices.size() - 4);
  EXPECT_FALSE(is_planar(b5));
}

TEST(Symmetry, SixIsomorphicClasses) {
  for (int n : {5, 6}) {
    const auto rep = symmetry_classes(n);
    std::size_t total = 0;
    for (const auto& c : rep.classes) {
      EXPECT_EQ(c.size(), factorial(n) / 6);
      total += c.size();
    }
    EXPECT_EQ(total, factorial(n));
    EXPECT_TRUE(rep.all_isomorphic);
    EXPECT_EQ(rep.isomorphic_pairs.size(), 15u);
  }
}

TEST(Symmetry, WitnessMapsCanonicalClassOntoEachClass) {
  const auto rep = symmetry_classes(5);
  const auto canonical = build_bprime(5);
  for (std::size_t c = 0; c < 6; ++c) {
    const auto target = build_class_subgraph(5, c);
    EXPECT_TRUE(relabeling_is_isomorphism(canonical, target, rep.relabelings[c])) << c;
  }
  // The identity does not carry the canonical class onto another class.
  EXPECT_FALSE(relabeling_is_isomorphism(canonical, build_class_subgraph(5, 1), class_relabeling(5, 0)));
}

TEST(Symmetry, DimensionGuard) { EXPECT_THROW(symmetry_classes(3), dimension_out_of_range); }

}  // namespace
}  // namespace bubblecross
