#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bubblecross/drawing_recursion.hpp"

namespace bubblecross {
namespace {

int count_abs_diff(const std::vector<VertexState>& v, int d) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [d](VertexState s) { return std::abs(s.diff()) == d; }));
}

int arc_total(const std::vector<VertexState>& v) {
  int t = 0;
  for (auto s : v) t += s.degree();
  return t;
}

TEST(ChooseStructure, ByParityClass) {
  EXPECT_EQ(choose_structure(6, {2, 3}), StructureKind::eleven);
  EXPECT_EQ(choose_structure(6, {3, 2}), StructureKind::eleven);
  EXPECT_EQ(choose_structure(7, {3, 3}), StructureKind::eleven);
  EXPECT_EQ(choose_structure(7, {2, 4}), StructureKind::two_zero);
  EXPECT_EQ(choose_structure(7, {4, 2}), StructureKind::zero_two);
}

TEST(ChooseStructure, RejectsStatesOutsideTheClass) {
  EXPECT_THROW(choose_structure(6, {1, 4}), invariant_violation);
  EXPECT_THROW(choose_structure(7, {5, 1}), invariant_violation);
  EXPECT_THROW(choose_structure(7, {3, 2}), invariant_violation);
  EXPECT_THROW(choose_structure(6, {-1, 6}), invariant_violation);
}

TEST(ReplaceVertex, EvenParentSplitsThreeAndFour) {
  const VertexState s{2, 3};
  const auto plan = make_plan(6, s, fixed_policy());
  const auto children = replace_vertex(6, s, plan);
  ASSERT_EQ(children.size(), 7u);
  EXPECT_EQ(count_abs_diff(children, 2), 3);
  EXPECT_EQ(count_abs_diff(children, 0), 4);
  EXPECT_EQ(arc_total(children), 42);
  // End children lose nothing and gain one path edge, both on the left.
  EXPECT_EQ(children.front(), (VertexState{3, 3}));
  EXPECT_EQ(children.back(), (VertexState{2, 4}));
}

TEST(ReplaceVertex, EveryPlanForAnEvenParent) {
  for (VertexState s : {VertexState{2, 3}, VertexState{3, 2}}) {
    std::vector<Side> lost(5, Side::right);
    std::fill_n(lost.begin(), s.l, Side::left);
    std::sort(lost.begin(), lost.end());
    do {
      const auto children = replace_vertex(6, s, {StructureKind::eleven, lost});
      ASSERT_EQ(count_abs_diff(children, 2), 3);
      ASSERT_EQ(count_abs_diff(children, 0), 4);
      ASSERT_EQ(arc_total(children), 42);
    } while (std::next_permutation(lost.begin(), lost.end()));
  }
}

TEST(ReplaceVertex, ZeroTwoKeepsChildrenOddBalanced) {
  const VertexState s{4, 2};
  const auto children = replace_vertex(7, s, make_plan(7, s, fixed_policy()));
  ASSERT_EQ(children.size(), 8u);
  for (auto c : children) EXPECT_TRUE(c.diff() == 1 || c.diff() == -1) << c.str();
  EXPECT_EQ(arc_total(children), 56);
}

TEST(ReplaceVertex, RejectsInconsistentPlans) {
  const VertexState s{2, 3};
  EXPECT_THROW(replace_vertex(6, s, {StructureKind::two_zero, {Side::left, Side::left, Side::right, Side::right, Side::right}}),
               invalid_input);
  EXPECT_THROW(replace_vertex(6, s, {StructureKind::eleven, {Side::left, Side::left, Side::right, Side::right}}),
               invalid_input);
  EXPECT_THROW(replace_vertex(6, s, {StructureKind::eleven, {Side::left, Side::left, Side::left, Side::right, Side::right}}),
               invalid_input);
}

TEST(Policies, ProduceValidLostSides) {
  for (PolicyKind kind : {PolicyKind::fixed, PolicyKind::round_robin, PolicyKind::random}) {
    const auto policy = make_policy(kind, 11);
    for (int call = 0; call < 4; ++call) {
      for (VertexState s : {VertexState{2, 3}, VertexState{3, 3}, VertexState{4, 2}, VertexState{2, 4}}) {
        const int n = s.degree() + 1;
        const auto lost = policy(n, s);
        ASSERT_EQ(static_cast<int>(lost.size()), n - 1);
        ASSERT_EQ(std::count(lost.begin(), lost.end(), Side::left), s.l);
      }
    }
  }
}

TEST(Policies, RandomIsSeedDeterministic) {
  const auto a = random_policy(99);
  const auto b = random_policy(99);
  for (int i = 0; i < 20; ++i) ASSERT_EQ(a(9, {4, 4}), b(9, {4, 4}));
}

TEST(Generations, SeedSplits) {
  const auto alt = seed_d6();
  EXPECT_EQ(alt.size(), 120u);
  EXPECT_EQ(alt.counts.at({2, 3}), 60u);
  EXPECT_EQ(alt.counts.at({3, 2}), 60u);
  EXPECT_EQ(seed_d6(SeedSplit::all_fewer_left).counts.at({2, 3}), 120u);
  EXPECT_EQ(seed_d6(SeedSplit::all_more_left).counts.at({3, 2}), 120u);
}

TEST(Generations, SevenThenEight) {
  const auto g7 = step_generation(seed_d6(), fixed_policy());
  EXPECT_EQ(g7.n, 7);
  EXPECT_EQ(g7.size(), 840u);
  const auto abs7 = g7.abs_diff_counts();
  EXPECT_EQ(abs7.at(0), 480u);
  EXPECT_EQ(abs7.at(2), 360u);

  const auto g8 = step_generation(g7, fixed_policy());
  EXPECT_EQ(g8.size(), 6720u);
  const auto abs8 = g8.abs_diff_counts();
  ASSERT_EQ(abs8.size(), 1u);
  EXPECT_EQ(abs8.at(1), 6720u);
}

// Every policy and seed split gives the same |l-r| profile at every dimension.
TEST(Generations, AbsDiffProfileIsPolicyIndependent) {
  std::vector<std::map<int, std::map<int, std::uint64_t>>> runs;
  for (SeedSplit split : {SeedSplit::alternating, SeedSplit::all_fewer_left, SeedSplit::all_more_left}) {
    for (PolicyKind kind : {PolicyKind::fixed, PolicyKind::round_robin, PolicyKind::random}) {
      const auto policy = make_policy(kind, 5);
      auto g = seed_d6(split);
      std::map<int, std::map<int, std::uint64_t>> profile;
      while (g.n < 10) {
        g = step_generation(g, policy);
        profile[g.n] = g.abs_diff_counts();
      }
      EXPECT_EQ(g.size(), 604800u);
      runs.push_back(profile);
    }
  }
  for (const auto& r : runs) EXPECT_EQ(r, runs.front());
}

TEST(Generations, DimensionGuardAndChecks) {
  GenerationState g11;
  g11.n = 11;
  EXPECT_THROW(step_generation(g11, fixed_policy()), dimension_out_of_range);

  auto bad = seed_d6();
  bad.counts[{1, 4}] = 1;
  bad.counts[{2, 3}] -= 1;
  EXPECT_THROW(check_generation(bad), invariant_violation);
  EXPECT_THROW(step_generation(bad, fixed_policy()), invariant_violation);

  auto short_gen = seed_d6();
  short_gen.counts[{2, 3}] -= 1;
  EXPECT_THROW(check_generation(short_gen), invariant_violation);
}

TEST(Tracked, CoreVerticesAndCompressionMatch) {
  for (SeedSplit split : {SeedSplit::alternating, SeedSplit::all_more_left}) {
    auto t = seed_d6_tracked(split);
    auto g = seed_d6(split);
    EXPECT_EQ(compress(t), g);
    while (t.n < kMaxTrackedN) {
      t = step_tracked(t, fixed_policy());
      g = step_generation(g, fixed_policy());
      EXPECT_EQ(compress(t), g) << t.n;

      const auto core = build_bprime(t.n);
      std::set<Permutation> expected;
      for (VertexId r : core.vertices) {
        const auto p = Permutation::unrank(t.n, r);
        if (in_bprime(p)) expected.insert(p);
      }
      std::set<Permutation> tracked;
      for (const auto& [p, s] : t.states) tracked.insert(p);
      EXPECT_EQ(tracked, expected) << t.n;
    }
  }
  EXPECT_THROW(step_tracked(TrackedGeneration{kMaxTrackedN, {}}, fixed_policy()), dimension_out_of_range);
}

}  // namespace
}  // namespace bubblecross
