#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bubblecross/errors.hpp"
#include "bubblecross/permutation.hpp"

namespace bubblecross {

using CrossingCount = std::int64_t;

enum class Side { left, right };

// A mesh M_{n,a}: anchors (0,1)..(0,n) on a vertical axis and n-2 families of
// parallel semi-lines. Family i (0-based) misses the semi-line at anchor
// lost[i]; families 0..a-1 go left, a..n-3 go right.
struct MeshSpec {
  int n = 0;
  int a = 0;
  std::vector<int> lost;  // a permutation of {2, ..., n-1}

  std::span<const int> left_section() const { return std::span<const int>(lost).first(static_cast<std::size_t>(a)); }
  std::span<const int> right_section() const { return std::span<const int>(lost).subspan(static_cast<std::size_t>(a)); }
  Side side_of(int family) const { return family < a ? Side::left : Side::right; }

  friend bool operator==(const MeshSpec&, const MeshSpec&) = default;
};

inline void validate(const MeshSpec& spec) {
  if (spec.n < 6) throw invalid_input("mesh needs n >= 6, got " + std::to_string(spec.n));
  if (spec.a < 0 || spec.a > spec.n - 2) {
    throw invalid_input("mesh split a=" + std::to_string(spec.a) + " outside [0, " + std::to_string(spec.n - 2) + "]");
  }
  if (static_cast<int>(spec.lost.size()) != spec.n - 2) {
    throw invalid_input("mesh needs " + std::to_string(spec.n - 2) + " lost values, got " +
                        std::to_string(spec.lost.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(spec.n + 1), false);
  for (int k : spec.lost) {
    if (k < 2 || k > spec.n - 1) throw invalid_input("lost value " + std::to_string(k) + " outside {2..n-1}");
    if (seen[k]) throw invalid_input("duplicate lost value " + std::to_string(k));
    seen[k] = true;
  }
}

inline MeshSpec make_mesh(int n, int a, std::vector<int> lost) {
  MeshSpec spec{n, a, std::move(lost)};
  validate(spec);
  return spec;
}

// Crossings between two same-side families whose lost anchors are k1 (the
// earlier family) and k2 (the later one). Asymmetric in (k1, k2).
inline CrossingCount pair_crossings(int n, int k1, int k2) {
  if (n < 6) throw invalid_input("pair_crossings needs n >= 6");
  if (k1 < 2 || k1 > n - 1 || k2 < 2 || k2 > n - 1) throw invalid_input("lost value outside {2..n-1}");
  if (k1 == k2) throw invalid_input("pair_crossings: k1 == k2");
  const CrossingCount pairs = static_cast<CrossingCount>(n) * (n - 1) / 2;
  return k1 < k2 ? pairs - (n - k2) - (k1 - 1) : pairs - (n - k2) - (k1 - 2);
}

namespace detail {

inline CrossingCount section_crossings(int n, std::span<const int> section) {
  CrossingCount total = 0;
  for (std::size_t i = 0; i < section.size(); ++i)
    for (std::size_t j = i + 1; j < section.size(); ++j) total += pair_crossings(n, section[i], section[j]);
  return total;
}

}  // namespace detail

// Families on opposite sides never meet, so only same-side pairs count.
inline CrossingCount total_crossings(const MeshSpec& spec) {
  validate(spec);
  return detail::section_crossings(spec.n, spec.left_section()) +
         detail::section_crossings(spec.n, spec.right_section());
}

// ---------------------------------------------------------------------------
// Geometric oracle: explicit rays, exact integer intersection tests.

struct IntPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// A point with rational coordinates x_num/den, y_num/den, den > 0.
struct RationalPoint {
  std::int64_t x_num = 0;
  std::int64_t y_num = 0;
  std::int64_t den = 1;
};

struct Ray {
  int family = 0;
  int anchor = 0;  // j: the ray starts at (0, j)
  IntPoint origin;
  IntPoint direction;
};

// Family i gets direction (-1, m_i) on the left and (+1, m_i) on the right.
// Slopes must strictly increase with family index on each side.
inline std::vector<Ray> mesh_rays(const MeshSpec& spec, std::span<const std::int64_t> slopes) {
  validate(spec);
  if (static_cast<int>(slopes.size()) != spec.n - 2) throw invalid_input("need one slope per family");
  for (int i = 0; i + 1 < spec.n - 2; ++i) {
    if (spec.side_of(i) == spec.side_of(i + 1) && slopes[i] >= slopes[i + 1]) {
      throw invalid_input("degenerate slope assignment: slopes must strictly increase within a side");
    }
  }
  std::vector<Ray> rays;
  rays.reserve(static_cast<std::size_t>((spec.n - 2) * (spec.n - 1)));
  for (int i = 0; i < spec.n - 2; ++i) {
    const std::int64_t dx = spec.side_of(i) == Side::left ? -1 : 1;
    for (int j = 1; j <= spec.n; ++j) {
      if (j == spec.lost[i]) continue;
      rays.push_back({i, j, {0, j}, {dx, slopes[i]}});
    }
  }
  return rays;
}

inline std::vector<std::int64_t> default_slopes(int n) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(std::max(n - 2, 0)));
  std::iota(s.begin(), s.end(), std::int64_t{1});
  return s;
}

// Common point of two rays strictly past both origins, if any.
inline std::optional<RationalPoint> ray_intersection(const Ray& p, const Ray& q) {
  auto cross = [](std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) { return ax * by - ay * bx; };
  const std::int64_t den = cross(p.direction.x, p.direction.y, q.direction.x, q.direction.y);
  if (den == 0) return std::nullopt;  // parallel
  const std::int64_t wx = q.origin.x - p.origin.x;
  const std::int64_t wy = q.origin.y - p.origin.y;
  std::int64_t t_num = cross(wx, wy, q.direction.x, q.direction.y);
  std::int64_t s_num = cross(wx, wy, p.direction.x, p.direction.y);
  std::int64_t d = den;
  if (d < 0) {
    d = -d;
    t_num = -t_num;
    s_num = -s_num;
  }
  if (t_num <= 0 || s_num <= 0) return std::nullopt;
  return RationalPoint{p.origin.x * d + t_num * p.direction.x, p.origin.y * d + t_num * p.direction.y, d};
}

// All crossing points between rays that neither share a family nor an anchor.
inline std::vector<RationalPoint> oracle_crossing_points(const MeshSpec& spec, std::span<const std::int64_t> slopes) {
  const auto rays = mesh_rays(spec, slopes);
  std::vector<RationalPoint> points;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i].family == rays[j].family || rays[i].anchor == rays[j].anchor) continue;
      if (auto pt = ray_intersection(rays[i], rays[j])) points.push_back(*pt);
    }
  }
  return points;
}

inline CrossingCount oracle_crossings(const MeshSpec& spec, std::span<const std::int64_t> slopes) {
  return static_cast<CrossingCount>(oracle_crossing_points(spec, slopes).size());
}

inline CrossingCount oracle_crossings(const MeshSpec& spec) {
  const auto slopes = default_slopes(spec.n);
  return oracle_crossings(spec, slopes);
}

// ---------------------------------------------------------------------------
// Sorting sections by adjacent swaps.

struct SwapStep {
  int position = 0;  // 0-based index i; lost[i] and lost[i+1] were exchanged
  int upper = 0;     // lost[i] before the swap
  int lower = 0;     // lost[i+1] before the swap
  CrossingCount before = 0;
  CrossingCount after = 0;
  CrossingCount delta() const { return after - before; }
};

struct SortResult {
  MeshSpec sorted;
  std::vector<SwapStep> steps;
};

// Repeatedly swaps the first adjacent inversion inside either section until
// both sections ascend. Every swap must raise the total by 2(k_i - k_{i+1}) - 1.
inline SortResult sort_spec(const MeshSpec& spec) {
  validate(spec);
  SortResult res{spec, {}};
  MeshSpec& cur = res.sorted;
  const int families = spec.n - 2;
  CrossingCount current = total_crossings(cur);
  for (;;) {
    int pos = -1;
    for (int i = 0; i + 1 < families; ++i) {
      if (cur.side_of(i) == cur.side_of(i + 1) && cur.lost[i] > cur.lost[i + 1]) {
        pos = i;
        break;
      }
    }
    if (pos < 0) break;
    SwapStep step{pos, cur.lost[pos], cur.lost[pos + 1], current, 0};
    std::swap(cur.lost[pos], cur.lost[pos + 1]);
    step.after = total_crossings(cur);
    current = step.after;
    const CrossingCount expected = 2 * static_cast<CrossingCount>(step.upper - step.lower) - 1;
    if (step.delta() != expected || step.delta() <= 0) {
      throw invariant_violation("sort_spec: swap at " + std::to_string(pos) + " changed total by " +
                                std::to_string(step.delta()) + ", expected " + std::to_string(expected));
    }
    res.steps.push_back(step);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Worst-case meshes.

namespace detail {

// Returns m for the supported (n, a) pairs, or 0 when unsupported.
inline int mesh_case_m(int n, int a) {
  if (n % 2 == 0) {
    const int m = n / 2;
    if (m >= 4 && (a == m - 2 || a == m - 1 || a == m)) return m;
  } else {
    const int m = (n + 1) / 2;
    if (m >= 4 && (a == m - 2 || a == m - 1)) return m;
  }
  return 0;
}

inline void append_range(std::vector<int>& out, int from, int to, int step) {
  for (int k = from; k <= to; k += step) out.push_back(k);
}

}  // namespace detail

inline bool mesh_case_supported(int n, int a) { return detail::mesh_case_m(n, a) != 0; }

// The maximizing lost-value order for each supported (n, a).
inline MeshSpec optimal_permutation(int n, int a) {
  const int m = detail::mesh_case_m(n, a);
  if (m == 0) {
    throw invalid_input("no worst-case mesh for (n, a) = (" + std::to_string(n) + ", " + std::to_string(a) + ")");
  }
  std::vector<int> p;
  if (n % 2 == 0) {
    if (a == m - 1) {
      detail::append_range(p, 2, n - 2, 2);
      detail::append_range(p, 3, n - 1, 2);
    } else if (a == m) {
      p.push_back(2);
      detail::append_range(p, 3, n - 1, 2);
      detail::append_range(p, 4, n - 2, 2);
    } else {
      detail::append_range(p, 4, n - 2, 2);
      p.push_back(2);
      detail::append_range(p, 3, n - 1, 2);
    }
  } else {
    if (a == m - 1) {
      detail::append_range(p, 2, n - 1, 2);
      detail::append_range(p, 3, n - 2, 2);
    } else {
      detail::append_range(p, 3, n - 2, 2);
      detail::append_range(p, 2, n - 1, 2);
    }
  }
  return make_mesh(n, a, std::move(p));
}

// Closed-form maximum of total_crossings over all lost-value orders, scaled
// by 24 so the polynomial has integer coefficients:
//   n = 2m, a = m-1:          3n^4 - 25n^3 + 72n^2 -  92n + 48
//   n = 2m, a in {m-2, m}:    3n^4 - 25n^3 + 84n^2 - 116n + 48
//   n = 2m-1, a in {m-2,m-1}: 3n^4 - 25n^3 + 75n^2 -  95n + 42
inline CrossingCount mesh_max(int n, int a) {
  const int m = detail::mesh_case_m(n, a);
  if (m == 0) {
    throw invalid_input("no closed form for (n, a) = (" + std::to_string(n) + ", " + std::to_string(a) + ")");
  }
  const std::int64_t x = n;
  const std::int64_t x2 = x * x;
  const std::int64_t x3 = x2 * x;
  const std::int64_t x4 = x3 * x;
  std::int64_t scaled = 0;
  if (n % 2 == 0 && a == m - 1) {
    scaled = 3 * x4 - 25 * x3 + 72 * x2 - 92 * x + 48;
  } else if (n % 2 == 0) {
    scaled = 3 * x4 - 25 * x3 + 84 * x2 - 116 * x + 48;
  } else {
    scaled = 3 * x4 - 25 * x3 + 75 * x2 - 95 * x + 42;
  }
  if (scaled % 24 != 0 || scaled < 0) {
    throw invariant_violation("mesh_max: closed form is not a non-negative integer at n=" + std::to_string(n));
  }
  return scaled / 24;
}

struct MaxResult {
  CrossingCount value = 0;
  MeshSpec witness;  // lexicographically smallest maximizer
};

inline constexpr int kMaxExhaustiveN = 11;

inline MaxResult exhaustive_max(int n, int a) {
  if (n < 6 || n > kMaxExhaustiveN) {
    throw dimension_out_of_range("exhaustive_max: n=" + std::to_string(n) + " outside [6, " +
                                 std::to_string(kMaxExhaustiveN) + "]");
  }
  if (a < 0 || a > n - 2) throw invalid_input("exhaustive_max: a outside [0, n-2]");
  MeshSpec spec{n, a, {}};
  for (int k = 2; k <= n - 1; ++k) spec.lost.push_back(k);
  MaxResult best{-1, spec};
  do {
    const CrossingCount t = detail::section_crossings(n, spec.left_section()) +
                            detail::section_crossings(n, spec.right_section());
    if (t > best.value) best = {t, spec};
  } while (std::next_permutation(spec.lost.begin(), spec.lost.end()));
  return best;
}

}  // namespace bubblecross
