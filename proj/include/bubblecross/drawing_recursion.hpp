#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bubblecross/errors.hpp"
#include "bubblecross/mesh.hpp"
#include "bubblecross/perm_graph.hpp"
#include "bubblecross/permutation.hpp"
#include "bubblecross/random.hpp"

namespace bubblecross {

// Left-arc and right-arc counts of a vertex placed on an axis.
struct VertexState {
  int l = 0;
  int r = 0;

  int diff() const { return l - r; }
  int degree() const { return l + r; }
  std::string str() const { return "(" + std::to_string(l) + "," + std::to_string(r) + ")"; }

  friend auto operator<=>(const VertexState&, const VertexState&) = default;
};

// How the n path edges of a replacement path are routed:
// eleven alternates left/right starting on the left, two_zero puts all of
// them left, zero_two all of them right.
enum class StructureKind { eleven, two_zero, zero_two };

inline const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::eleven:
      return "11";
    case StructureKind::two_zero:
      return "20";
    case StructureKind::zero_two:
      return "02";
  }
  return "?";
}

// Balanced-drawing parity classes: l - r in {0, 2, -2} for odd n and in
// {1, -1} for even n, with l + r = n - 1.
inline bool in_parity_class(int n, VertexState s) {
  if (s.l < 0 || s.r < 0 || s.degree() != n - 1) return false;
  const int d = s.diff();
  return n % 2 == 0 ? (d == 1 || d == -1) : (d == 0 || d == 2 || d == -2);
}

inline StructureKind choose_structure(int n, VertexState s) {
  if (!in_parity_class(n, s)) {
    throw invariant_violation("vertex state " + s.str() + " is outside the parity class for n=" + std::to_string(n));
  }
  if (n % 2 == 0 || s.diff() == 0) return StructureKind::eleven;
  return s.diff() == -2 ? StructureKind::two_zero : StructureKind::zero_two;
}

// lost_side[i - 2] names the bunch side whose edge child v^i loses,
// for i = 2..n. Children v^1 and v^{n+1} lose nothing.
struct ReplacementPlan {
  StructureKind structure = StructureKind::eleven;
  std::vector<Side> lost_side;
};

inline Side path_edge_side(StructureKind kind, int edge) {
  switch (kind) {
    case StructureKind::eleven:
      return edge % 2 == 1 ? Side::left : Side::right;
    case StructureKind::two_zero:
      return Side::left;
    case StructureKind::zero_two:
      return Side::right;
  }
  return Side::left;
}

// States of v^1..v^{n+1} after v (at dimension n) is replaced by its path.
inline std::vector<VertexState> replace_vertex(int n, VertexState s, const ReplacementPlan& plan) {
  if (plan.structure != choose_structure(n, s)) throw invalid_input("plan structure does not match the vertex state");
  if (static_cast<int>(plan.lost_side.size()) != n - 1) throw invalid_input("plan must assign n-1 lost edges");
  const auto lefts = std::count(plan.lost_side.begin(), plan.lost_side.end(), Side::left);
  if (lefts != s.l) {
    throw invalid_input("plan loses " + std::to_string(lefts) + " left edges, vertex has l=" + std::to_string(s.l));
  }

  std::vector<VertexState> children(static_cast<std::size_t>(n + 1), s);
  for (int i = 2; i <= n; ++i) {
    VertexState& c = children[i - 1];
    (plan.lost_side[i - 2] == Side::left ? c.l : c.r) -= 1;
  }
  // Path edge e joins v^e and v^{e+1}.
  for (int e = 1; e <= n; ++e) {
    const Side side = path_edge_side(plan.structure, e);
    for (int end : {e, e + 1}) {
      VertexState& c = children[end - 1];
      (side == Side::left ? c.l : c.r) += 1;
    }
  }
  return children;
}

// ---------------------------------------------------------------------------
// Lost-side policies. The construction leaves open which child loses which
// bunch; every policy must produce the same class counts.

using LostSidePolicy = std::function<std::vector<Side>(int n, VertexState s)>;

enum class PolicyKind { fixed, round_robin, random };

inline const char* to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::fixed:
      return "fixed";
    case PolicyKind::round_robin:
      return "roundrobin";
    case PolicyKind::random:
      return "random";
  }
  return "?";
}

// All left losses on the lowest child indices.
inline LostSidePolicy fixed_policy() {
  return [](int n, VertexState s) {
    std::vector<Side> out(static_cast<std::size_t>(n - 1), Side::right);
    std::fill_n(out.begin(), s.l, Side::left);
    return out;
  };
}

// Interleaves left and right losses; the leading side flips on every call.
inline LostSidePolicy round_robin_policy() {
  auto flip = std::make_shared<bool>(false);
  return [flip](int n, VertexState s) {
    std::vector<Side> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    int l = s.l;
    int r = s.r;
    bool take_left = !*flip;
    *flip = !*flip;
    while (l > 0 || r > 0) {
      if ((take_left && l > 0) || r == 0) {
        out.push_back(Side::left);
        --l;
      } else {
        out.push_back(Side::right);
        --r;
      }
      take_left = !take_left;
    }
    return out;
  };
}

inline LostSidePolicy random_policy(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [rng](int n, VertexState s) {
    std::vector<Side> out(static_cast<std::size_t>(n - 1), Side::right);
    std::fill_n(out.begin(), s.l, Side::left);
    shuffle(std::span<Side>(out), *rng);
    return out;
  };
}

inline LostSidePolicy make_policy(PolicyKind kind, std::uint64_t seed = kDefaultSeed) {
  switch (kind) {
    case PolicyKind::fixed:
      return fixed_policy();
    case PolicyKind::round_robin:
      return round_robin_policy();
    case PolicyKind::random:
      return random_policy(seed);
  }
  return fixed_policy();
}

inline ReplacementPlan make_plan(int n, VertexState s, const LostSidePolicy& policy) {
  return {choose_structure(n, s), policy(n, s)};
}

// ---------------------------------------------------------------------------
// Generations, stored as state -> multiplicity.

struct GenerationState {
  int n = 0;
  std::map<VertexState, std::uint64_t> counts;

  std::uint64_t size() const {
    std::uint64_t total = 0;
    for (const auto& [s, c] : counts) total += c;
    return total;
  }

  // Multiplicities of |l - r|, the quantity the bound recurrences consume.
  std::map<int, std::uint64_t> abs_diff_counts() const {
    std::map<int, std::uint64_t> out;
    for (const auto& [s, c] : counts) out[std::abs(s.diff())] += c;
    return out;
  }

  friend bool operator==(const GenerationState&, const GenerationState&) = default;
};

inline constexpr int kMaxGenerationN = 11;

// Convention for the (2,3)/(3,2) split of the 120 base vertices.
enum class SeedSplit { alternating, all_fewer_left, all_more_left };

inline GenerationState seed_d6(SeedSplit split = SeedSplit::alternating) {
  GenerationState g;
  g.n = 6;
  switch (split) {
    case SeedSplit::alternating:
      g.counts[{2, 3}] = 60;
      g.counts[{3, 2}] = 60;
      break;
    case SeedSplit::all_fewer_left:
      g.counts[{2, 3}] = 120;
      break;
    case SeedSplit::all_more_left:
      g.counts[{3, 2}] = 120;
      break;
  }
  return g;
}

// Checks cardinality n!/6, degree n-1 and the parity class of every state.
inline void check_generation(const GenerationState& g) {
  const std::uint64_t expected = factorial(g.n) / 6;
  if (g.size() != expected) {
    throw invariant_violation("generation n=" + std::to_string(g.n) + " holds " + std::to_string(g.size()) +
                              " states, expected " + std::to_string(expected));
  }
  for (const auto& [s, c] : g.counts) {
    if (!in_parity_class(g.n, s)) {
      throw invariant_violation("generation n=" + std::to_string(g.n) + ": state " + s.str() +
                                " violates the parity class");
    }
  }
}

namespace detail {

// Per-replacement checks: arc conservation, child parity class, and for even
// n the split of children into n/2 with |l-r| = 2 and n/2+1 with l-r = 0.
inline void check_children(int n, VertexState parent, const std::vector<VertexState>& children) {
  auto fail = [&](const std::string& what) {
    throw invariant_violation("replacing " + parent.str() + " at n=" + std::to_string(n) + ": " + what);
  };
  if (static_cast<int>(children.size()) != n + 1) fail("wrong child count");
  int arcs = 0;
  int balanced = 0;
  int off_by_two = 0;
  for (const VertexState& c : children) {
    arcs += c.degree();
    if (!in_parity_class(n + 1, c)) fail("child " + c.str() + " violates the parity class");
    balanced += c.diff() == 0;
    off_by_two += std::abs(c.diff()) == 2;
  }
  if (arcs != n * (n + 1)) fail("arc total " + std::to_string(arcs) + " != n(n+1)");
  if (n % 2 == 0 && (off_by_two != n / 2 || balanced != n / 2 + 1)) {
    fail("children split " + std::to_string(off_by_two) + "/" + std::to_string(balanced) + ", expected " +
         std::to_string(n / 2) + "/" + std::to_string(n / 2 + 1));
  }
}

}  // namespace detail

// Replaces every vertex of the generation once, asking `policy` for a fresh
// plan per vertex instance.
inline GenerationState step_generation(const GenerationState& g, const LostSidePolicy& policy) {
  if (g.n < 6 || g.n + 1 > kMaxGenerationN) {
    throw dimension_out_of_range("step_generation: target n=" + std::to_string(g.n + 1) + " outside [7, " +
                                 std::to_string(kMaxGenerationN) + "]");
  }
  check_generation(g);
  GenerationState next;
  next.n = g.n + 1;
  for (const auto& [s, mult] : g.counts) {
    for (std::uint64_t k = 0; k < mult; ++k) {
      const auto children = replace_vertex(g.n, s, make_plan(g.n, s, policy));
      detail::check_children(g.n, s, children);
      for (const VertexState& c : children) ++next.counts[c];
    }
  }
  check_generation(next);
  return next;
}

// ---------------------------------------------------------------------------
// Per-vertex tracking on the actual core vertices of B'_n. Child v^i of v is
// v with symbol n+1 inserted before position i. Small n only.

inline constexpr int kMaxTrackedN = 8;

struct TrackedGeneration {
  int n = 0;
  std::map<Permutation, VertexState> states;
};

inline TrackedGeneration seed_d6_tracked(SeedSplit split = SeedSplit::alternating) {
  TrackedGeneration t;
  t.n = 6;
  const LabeledGraph g = build_bprime(6);
  std::size_t k = 0;
  for (VertexId r : g.vertices) {
    const Permutation p = Permutation::unrank(6, r);
    if (!in_bprime(p)) continue;
    VertexState s{2, 3};
    if (split == SeedSplit::all_more_left || (split == SeedSplit::alternating && k % 2 == 1)) s = {3, 2};
    t.states.emplace(p, s);
    ++k;
  }
  return t;
}

inline TrackedGeneration step_tracked(const TrackedGeneration& t, const LostSidePolicy& policy) {
  if (t.n + 1 > kMaxTrackedN) {
    throw dimension_out_of_range("tracked generations stop at n=" + std::to_string(kMaxTrackedN));
  }
  TrackedGeneration next;
  next.n = t.n + 1;
  for (const auto& [v, s] : t.states) {
    const auto children = replace_vertex(t.n, s, make_plan(t.n, s, policy));
    detail::check_children(t.n, s, children);
    const auto labels = expand_vertex(v);
    for (std::size_t i = 0; i < labels.size(); ++i) next.states.emplace(labels[i], children[i]);
  }
  return next;
}

inline GenerationState compress(const TrackedGeneration& t) {
  GenerationState g;
  g.n = t.n;
  for (const auto& [v, s] : t.states) ++g.counts[s];
  return g;
}

}  // namespace bubblecross
