#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bubblecross/errors.hpp"
#include "bubblecross/permutation.hpp"

namespace bubblecross {

// Vertices are stored by lexicographic rank; 12! still fits in 32 bits.
using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct GraphLimits {
  int max_n = 10;  // full materialization guard; 10! = 3,628,800 vertices
};

inline constexpr int kHardMaxGraphN = 12;

// A graph whose vertices are permutations of 1..n, identified by rank.
// Because rank order is lexicographic order, `vertices` and `edges` sorted by
// rank are also sorted by label.
struct LabeledGraph {
  int n = 0;
  std::vector<VertexId> vertices;  // ascending
  std::vector<Edge> edges;         // ascending, u < v
  // Vertices that carry the defining pattern (B'_n); all vertices for B_n.
  std::size_t core_vertex_count = 0;

  Permutation label(std::size_t index) const { return Permutation::unrank(n, vertices[index]); }

  // Position of `rank` in `vertices`, or vertices.size() if absent.
  std::size_t index_of(VertexId rank) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), rank);
    return (it != vertices.end() && *it == rank) ? static_cast<std::size_t>(it - vertices.begin())
                                                 : vertices.size();
  }
};

inline std::vector<std::vector<std::size_t>> adjacency_lists(const LabeledGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const Edge& e : g.edges) {
    const std::size_t a = g.index_of(e.u);
    const std::size_t b = g.index_of(e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

inline std::vector<std::size_t> degrees(const LabeledGraph& g) {
  std::vector<std::size_t> deg(g.vertices.size(), 0);
  for (const Edge& e : g.edges) {
    ++deg[g.index_of(e.u)];
    ++deg[g.index_of(e.v)];
  }
  return deg;
}

inline bool is_connected(const LabeledGraph& g) {
  if (g.vertices.empty()) return true;
  const auto adj = adjacency_lists(g);
  std::vector<bool> seen(adj.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t x = frontier.front();
    frontier.pop();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == adj.size();
}

namespace detail {

inline void check_graph_dimension(int n, const GraphLimits& limits, int min_n) {
  const int guard = std::min(limits.max_n, kHardMaxGraphN);
  if (n < min_n || n > guard) {
    throw dimension_out_of_range("dimension n=" + std::to_string(n) + " outside [" + std::to_string(min_n) + ", " +
                                 std::to_string(guard) + "]");
  }
}

}  // namespace detail

inline LabeledGraph build_bn(int n, const GraphLimits& limits = {}) {
  detail::check_graph_dimension(n, limits, 2);
  const Rank count = factorial(n);
  LabeledGraph g;
  g.n = n;
  g.vertices.resize(count);
  for (Rank r = 0; r < count; ++r) g.vertices[r] = static_cast<VertexId>(r);
  g.core_vertex_count = count;
  g.edges.reserve(count * static_cast<Rank>(n - 1) / 2);
  std::vector<Rank> higher;
  for (Rank r = 0; r < count; ++r) {
    higher.clear();
    for (Rank q : neighbor_ranks(Permutation::unrank(n, r)))
      if (q > r) higher.push_back(q);
    std::sort(higher.begin(), higher.end());
    for (Rank q : higher) g.edges.push_back({static_cast<VertexId>(r), static_cast<VertexId>(q)});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Pattern classes on the symbols {1,2,3,4}.

using Pattern4 = std::array<int, 4>;

// Entries of p with value <= 4, in order of appearance.
inline Pattern4 pattern_of(const Permutation& p) {
  if (p.size() < 4) throw invalid_input("pattern_of needs n >= 4");
  Pattern4 out{};
  int k = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p[i] <= 4) out[k++] = p[i];
  return out;
}

// One of the six relative orders of the symbols 1, 2, 3 together with the
// four length-4 patterns obtained by inserting 4 into that order.
struct PatternClass {
  std::array<int, 3> order{};
  std::array<Pattern4, 4> member_patterns{};
};

inline std::array<PatternClass, 6> pattern_classes() {
  std::array<PatternClass, 6> classes{};
  std::array<int, 3> order{1, 2, 3};
  std::size_t c = 0;
  do {
    PatternClass& pc = classes[c++];
    pc.order = order;
    for (int slot = 0; slot < 4; ++slot) {
      Pattern4 pat{};
      for (int i = 0, j = 0; i < 4; ++i) pat[i] = (i == slot) ? 4 : order[j++];
      pc.member_patterns[slot] = pat;
    }
    std::sort(pc.member_patterns.begin(), pc.member_patterns.end());
  } while (std::next_permutation(order.begin(), order.end()));
  return classes;
}

inline constexpr std::size_t kCanonicalClass = 0;  // order (1,2,3)

// Index into pattern_classes() of p's relative order of 1, 2, 3.
inline std::size_t pattern_class_of(const Permutation& p) {
  const Pattern4 pat = pattern_of(p);
  std::array<int, 3> order{};
  int k = 0;
  for (int v : pat)
    if (v != 4) order[k++] = v;
  static const auto classes = pattern_classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].order == order) return c;
  throw invariant_violation("pattern_class_of: unreachable");
}

// Membership in B'_n: the {1,2,3,4}-pattern is one of
// (1,2,3,4), (1,2,4,3), (1,4,2,3), (4,1,2,3).
inline bool in_bprime(const Permutation& p) {
  static const auto members = pattern_classes()[kCanonicalClass].member_patterns;
  const Pattern4 pat = pattern_of(p);
  return std::find(members.begin(), members.end(), pat) != members.end();
}

// Core vertices = permutations in pattern class `class_index`; edges = every
// B_n edge with at least one core endpoint; non-core endpoints are included.
inline LabeledGraph build_class_subgraph(int n, std::size_t class_index, const GraphLimits& limits = {}) {
  detail::check_graph_dimension(n, limits, 4);
  const Rank count = factorial(n);
  LabeledGraph g;
  g.n = n;
  std::vector<bool> core(count, false);
  for (Rank r = 0; r < count; ++r) core[r] = pattern_class_of(Permutation::unrank(n, r)) == class_index;
  std::vector<VertexId> verts;
  for (Rank r = 0; r < count; ++r) {
    if (!core[r]) continue;
    verts.push_back(static_cast<VertexId>(r));
    ++g.core_vertex_count;
    for (Rank q : neighbor_ranks(Permutation::unrank(n, r))) {
      if (core[q] && q < r) continue;  // added from the other side
      if (!core[q]) verts.push_back(static_cast<VertexId>(q));
      g.edges.push_back({static_cast<VertexId>(std::min(r, q)), static_cast<VertexId>(std::max(r, q))});
    }
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  g.vertices = std::move(verts);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline LabeledGraph build_bprime(int n, const GraphLimits& limits = {}) {
  return build_class_subgraph(n, kCanonicalClass, limits);
}

// ---------------------------------------------------------------------------
// Planarity (Boyer-Myrvold, via Boost.Graph).

inline bool is_planar(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(vertex_count);
  for (const auto& [a, b] : edges) boost::add_edge(a, b, g);
  return boost::boyer_myrvold_planarity_test(g);
}

inline bool is_planar(const LabeledGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) edges.emplace_back(g.index_of(e.u), g.index_of(e.v));
  return is_planar(g.vertices.size(), edges);
}

// ---------------------------------------------------------------------------
// Six-fold symmetry of B_n under relabeling of the symbols 1, 2, 3.

// Index = old symbol (1..n), value = new symbol. Entry 0 is unused.
using SymbolMap = std::vector<int>;

inline SymbolMap class_relabeling(int n, std::size_t class_index) {
  SymbolMap map(static_cast<std::size_t>(n + 1));
  for (int s = 0; s <= n; ++s) map[s] = s;
  const auto order = pattern_classes()[class_index].order;
  for (int s = 1; s <= 3; ++s) map[s] = order[s - 1];
  return map;
}

inline SymbolMap compose(const SymbolMap& outer, const SymbolMap& inner) {
  SymbolMap out(inner.size());
  for (std::size_t s = 0; s < inner.size(); ++s) out[s] = outer[inner[s]];
  return out;
}

inline SymbolMap invert(const SymbolMap& map) {
  SymbolMap out(map.size());
  for (std::size_t s = 0; s < map.size(); ++s) out[map[s]] = static_cast<int>(s);
  return out;
}

// True iff `map` carries g's vertex set and edge set exactly onto h's.
inline bool relabeling_is_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const SymbolMap& map) {
  if (g.n != h.n || g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return false;
  auto image = [&](VertexId r) {
    return static_cast<VertexId>(Permutation::unrank(g.n, r).relabeled(map).rank());
  };
  std::vector<VertexId> verts;
  verts.reserve(g.vertices.size());
  for (VertexId r : g.vertices) verts.push_back(image(r));
  std::sort(verts.begin(), verts.end());
  if (verts != h.vertices) return false;
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    const VertexId a = image(e.u);
    const VertexId b = image(e.v);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  return edges == h.edges;
}

struct SymmetryReport {
  int n = 0;
  std::array<std::vector<VertexId>, 6> classes;  // core vertex ranks per class
  std::array<SymbolMap, 6> relabelings;          // canonical class -> class c
  std::vector<std::pair<std::size_t, std::size_t>> isomorphic_pairs;
  bool all_isomorphic = false;
};

inline SymmetryReport symmetry_classes(int n, const GraphLimits& limits = {}) {
  detail::check_graph_dimension(n, limits, 4);
  SymmetryReport rep;
  rep.n = n;
  const Rank count = factorial(n);
  for (Rank r = 0; r < count; ++r)
    rep.classes[pattern_class_of(Permutation::unrank(n, r))].push_back(static_cast<VertexId>(r));

  std::array<LabeledGraph, 6> subgraphs;
  for (std::size_t c = 0; c < 6; ++c) {
    subgraphs[c] = build_class_subgraph(n, c, limits);
    rep.relabelings[c] = class_relabeling(n, c);
  }
  rep.all_isomorphic = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      const SymbolMap map = compose(rep.relabelings[j], invert(rep.relabelings[i]));
      if (relabeling_is_isomorphism(subgraphs[i], subgraphs[j], map)) {
        rep.isomorphic_pairs.emplace_back(i, j);
      } else {
        rep.all_isomorphic = false;
      }
    }
  }
  return rep;
}

}  // namespace bubblecross
