#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bubblecross/bounds.hpp"
#include "bubblecross/drawing_recursion.hpp"
#include "bubblecross/mesh.hpp"
#include "bubblecross/perm_graph.hpp"
#include "bubblecross/random.hpp"

namespace bubblecross::verify {

struct SuiteReport {
  explicit SuiteReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<std::string> lines;
  std::string counterexample;  // first failure, empty on success

  void fail(const std::string& what) {
    if (passed) counterexample = what;
    passed = false;
  }
};

inline std::string describe(const MeshSpec& spec) {
  std::ostringstream os;
  os << "M(" << spec.n << "," << spec.a << ") P=(";
  for (std::size_t i = 0; i < spec.lost.size(); ++i) os << (i ? "," : "") << spec.lost[i];
  os << ")";
  return os.str();
}

inline MeshSpec random_mesh(int n, Rng& rng) {
  MeshSpec spec{n, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1))), {}};
  for (int k = 2; k <= n - 1; ++k) spec.lost.push_back(k);
  shuffle(std::span<int>(spec.lost), rng);
  return spec;
}

// Calls fn(spec) for every split a and every lost-value order at dimension n.
template <typename Fn>
void for_each_mesh(int n, Fn&& fn) {
  for (int a = 0; a <= n - 2; ++a) {
    MeshSpec spec{n, a, {}};
    for (int k = 2; k <= n - 1; ++k) spec.lost.push_back(k);
    do {
      fn(spec);
    } while (std::next_permutation(spec.lost.begin(), spec.lost.end()));
  }
}

inline constexpr int kRandomSpecsPerN = 100;

// Pairwise formula sums against the ray-intersection oracle.
inline SuiteReport pairs(std::uint64_t seed = kDefaultSeed) {
  SuiteReport rep{"pairs"};
  auto check = [&](const MeshSpec& spec) {
    ++rep.cases;
    const auto formula = total_crossings(spec);
    const auto oracle = oracle_crossings(spec);
    if (formula != oracle) {
      rep.fail(describe(spec) + ": formula " + std::to_string(formula) + " != oracle " + std::to_string(oracle));
    }
  };
  for_each_mesh(6, check);
  const std::uint64_t exhaustive = rep.cases;
  Rng rng(seed);
  for (int n = 7; n <= 10; ++n)
    for (int i = 0; i < kRandomSpecsPerN; ++i) check(random_mesh(n, rng));
  rep.lines.push_back(std::to_string(exhaustive) + " exhaustive + " + std::to_string(rep.cases - exhaustive) +
                      " random specs, " + (rep.passed ? "all equal" : "MISMATCH"));
  return rep;
}

// Sorting both sections never lowers the total, one inversion per swap.
inline SuiteReport sorting() {
  SuiteReport rep{"sorting"};
  std::uint64_t swaps = 0;
  for (int n : {6, 7}) {
    for_each_mesh(n, [&](const MeshSpec& spec) {
      ++rep.cases;
      try {
        const auto res = sort_spec(spec);
        swaps += res.steps.size();
        const auto beta = inversions(std::vector<int>(spec.left_section().begin(), spec.left_section().end())) +
                          inversions(std::vector<int>(spec.right_section().begin(), spec.right_section().end()));
        if (res.steps.size() != beta) rep.fail(describe(spec) + ": swap count differs from inversion count");
        if (total_crossings(spec) > total_crossings(res.sorted)) rep.fail(describe(spec) + ": sorting lowered the total");
        if (!std::is_sorted(res.sorted.left_section().begin(), res.sorted.left_section().end()) ||
            !std::is_sorted(res.sorted.right_section().begin(), res.sorted.right_section().end())) {
          rep.fail(describe(spec) + ": sections not sorted");
        }
      } catch (const invariant_violation& e) {
        rep.fail(describe(spec) + ": " + e.what());
      }
    });
  }
  rep.lines.push_back(std::to_string(rep.cases) + " specs, " + std::to_string(swaps) +
                      " swaps, every delta = 2(k_i - k_{i+1}) - 1 > 0");
  return rep;
}

inline const std::vector<std::pair<int, int>>& maxima_cases() {
  static const std::vector<std::pair<int, int>> cases = {{7, 2}, {7, 3}, {8, 2},  {8, 3},  {8, 4},
                                                         {9, 3}, {9, 4}, {10, 3}, {10, 4}, {10, 5}};
  return cases;
}

inline SuiteReport maxima() {
  SuiteReport rep{"maxima"};
  std::set<CrossingCount> maxima;
  for (const auto& [n, a] : maxima_cases()) {
    ++rep.cases;
    const auto closed = mesh_max(n, a);
    const auto best = exhaustive_max(n, a);
    const auto optimal = total_crossings(optimal_permutation(n, a));
    maxima.insert(best.value);
    std::ostringstream line;
    line << "(n=" << n << ", a=" << a << "): exhaustive " << best.value << ", closed form " << closed
         << ", listed order " << optimal;
    rep.lines.push_back(line.str());
    if (best.value != closed || optimal != closed) rep.fail(line.str());
  }
  std::ostringstream summary;
  summary << "maxima {";
  bool first = true;
  for (auto v : maxima) {
    summary << (first ? "" : ", ") << v;
    first = false;
  }
  summary << "} " << (rep.passed ? "matched" : "NOT matched");
  rep.lines.push_back(summary.str());
  return rep;
}

inline constexpr int kTraceMaxN = 10;

// Replacement state machine from the n=6 seed up to n=10 under three policies
// and both extreme seed splits.
inline SuiteReport replacement(std::uint64_t seed = kDefaultSeed) {
  SuiteReport rep{"replacement"};
  std::map<int, std::set<std::map<int, std::uint64_t>>> abs_profiles;
  auto run = [&](const std::string& label, GenerationState g, const LostSidePolicy& policy) {
    try {
      abs_profiles[g.n].insert(g.abs_diff_counts());
      while (g.n < kTraceMaxN) {
        rep.cases += g.size();
        g = step_generation(g, policy);
        abs_profiles[g.n].insert(g.abs_diff_counts());
      }
    } catch (const invariant_violation& e) {
      rep.fail(label + ": " + e.what());
    }
  };
  for (PolicyKind kind : {PolicyKind::fixed, PolicyKind::round_robin, PolicyKind::random}) {
    run(to_string(kind), seed_d6(), make_policy(kind, seed));
  }
  run("fixed/all (2,3) seed", seed_d6(SeedSplit::all_fewer_left), fixed_policy());
  run("random/all (3,2) seed", seed_d6(SeedSplit::all_more_left), random_policy(seed + 1));
  for (const auto& [n, profiles] : abs_profiles) {
    if (profiles.size() != 1) rep.fail("|l-r| multiset at n=" + std::to_string(n) + " depends on the policy");
  }
  rep.lines.push_back(std::to_string(rep.cases) + " vertex replacements checked across 5 runs to n=" +
                      std::to_string(kTraceMaxN));
  return rep;
}

inline SuiteReport symmetry() {
  SuiteReport rep{"symmetry"};
  for (int n : {5, 6}) {
    ++rep.cases;
    const auto sym = symmetry_classes(n);
    const auto expected = factorial(n) / 6;
    bool sizes_ok = true;
    for (const auto& c : sym.classes) sizes_ok = sizes_ok && c.size() == expected;
    std::ostringstream line;
    line << "n=" << n << ": 6 classes of " << expected << (sizes_ok ? "" : " (SIZE MISMATCH)") << ", "
         << sym.isomorphic_pairs.size() << "/15 pairs isomorphic under symbol relabeling";
    rep.lines.push_back(line.str());
    if (!sizes_ok || !sym.all_isomorphic) rep.fail(line.str());
  }
  return rep;
}

inline SuiteReport planarity() {
  SuiteReport rep{"planarity"};
  for (int n = 2; n <= 5; ++n) {
    ++rep.cases;
    const bool planar = is_planar(build_bn(n));
    const bool expected = n <= 4;
    rep.lines.push_back("B_" + std::to_string(n) + (planar ? " planar" : " non-planar"));
    if (planar != expected) rep.fail("B_" + std::to_string(n) + " planarity verdict is wrong");
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pairs", "sorting", "maxima", "replacement", "symmetry", "planarity"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed) {
  if (name == "pairs") return pairs(seed);
  if (name == "sorting") return sorting();
  if (name == "maxima") return maxima();
  if (name == "replacement") return replacement(seed);
  if (name == "symmetry") return symmetry();
  if (name == "planarity") return planarity();
  throw invalid_input("unknown suite '" + name + "'");
}

}  // namespace bubblecross::verify
