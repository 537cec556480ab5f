#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bubblecross/errors.hpp"

namespace bubblecross {

inline constexpr int kMaxSymbols = 16;

// Lexicographic rank of a permutation among all permutations of 1..n.
using Rank = std::uint64_t;

inline Rank factorial(int n) {
  Rank f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Rank>(i);
  return f;
}

// A vertex label of B_n: the integers 1..n, each exactly once, stored inline.
// Comparison orders by length first, then lexicographically by entries.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::span<const int> entries) {
    const auto n = static_cast<int>(entries.size());
    if (n < 2 || n > kMaxSymbols) {
      throw invalid_input("permutation length must be in [2, " + std::to_string(kMaxSymbols) +
                          "], got " + std::to_string(n));
    }
    std::array<bool, kMaxSymbols + 1> seen{};
    for (int i = 0; i < n; ++i) {
      const int v = entries[i];
      if (v < 1 || v > n || seen[v]) {
        throw invalid_input("not a permutation of 1.." + std::to_string(n));
      }
      seen[v] = true;
      entries_[i] = static_cast<std::uint8_t>(v);
    }
    n_ = static_cast<std::uint8_t>(n);
  }

  Permutation(std::initializer_list<int> entries)
      : Permutation(std::span<const int>(entries.begin(), entries.size())) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(v);
  }

  // Accepts the digit form "125634" (n <= 9) and the dotted form "10.2.1...".
  static Permutation parse(std::string_view label) {
    std::vector<int> v;
    if (label.find('.') == std::string_view::npos) {
      for (char c : label) {
        if (c < '1' || c > '9') throw invalid_input("bad permutation label '" + std::string(label) + "'");
        v.push_back(c - '0');
      }
    } else {
      int cur = -1;
      for (char c : label) {
        if (c == '.') {
          if (cur < 0) throw invalid_input("bad permutation label '" + std::string(label) + "'");
          v.push_back(cur);
          cur = -1;
        } else if (c >= '0' && c <= '9') {
          cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else {
          throw invalid_input("bad permutation label '" + std::string(label) + "'");
        }
      }
      if (cur < 0) throw invalid_input("bad permutation label '" + std::string(label) + "'");
      v.push_back(cur);
    }
    return Permutation(v);
  }

  static Permutation unrank(int n, Rank rank) {
    if (n < 2 || n > kMaxSymbols) throw invalid_input("unrank: bad length " + std::to_string(n));
    if (n <= 20 && rank >= factorial(n)) throw invalid_input("unrank: rank out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
      const Rank f = factorial(i);
      const auto digit = static_cast<std::size_t>(rank / f);
      rank %= f;
      out.push_back(pool[digit]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(out);
  }

  int size() const noexcept { return n_; }
  int operator[](int i) const noexcept { return entries_[static_cast<std::size_t>(i)]; }

  std::vector<int> to_vector() const { return {entries_.begin(), entries_.begin() + n_}; }

  int position_of(int symbol) const noexcept {
    for (int i = 0; i < n_; ++i)
      if (entries_[i] == symbol) return i;
    return -1;
  }

  // Swaps the entries at 0-based positions pos and pos + 1.
  Permutation swapped(int pos) const {
    if (pos < 0 || pos + 1 >= n_) throw invalid_input("swap position out of range");
    Permutation q = *this;
    std::swap(q.entries_[pos], q.entries_[pos + 1]);
    return q;
  }

  // Inserts symbol n+1 so that it lands at 0-based position `slot`.
  Permutation with_max_inserted(int slot) const {
    if (n_ + 1 > kMaxSymbols) throw dimension_out_of_range("cannot extend beyond " + std::to_string(kMaxSymbols));
    if (slot < 0 || slot > n_) throw invalid_input("insertion slot out of range");
    Permutation q;
    q.n_ = static_cast<std::uint8_t>(n_ + 1);
    for (int i = 0, j = 0; i <= n_; ++i) {
      q.entries_[i] = (i == slot) ? static_cast<std::uint8_t>(n_ + 1) : entries_[j++];
    }
    return q;
  }

  // Applies a symbol map (index = old symbol, value = new symbol) to every entry.
  Permutation relabeled(std::span<const int> symbol_map) const {
    std::vector<int> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = symbol_map[entries_[i]];
    return Permutation(v);
  }

  // Lehmer code: digit i counts later entries smaller than entry i.
  std::array<std::uint8_t, kMaxSymbols> lehmer_code() const noexcept {
    std::array<std::uint8_t, kMaxSymbols> code{};
    for (int i = 0; i < n_; ++i) {
      std::uint8_t c = 0;
      for (int j = i + 1; j < n_; ++j) c += entries_[j] < entries_[i];
      code[i] = c;
    }
    return code;
  }

  Rank rank() const noexcept {
    const auto code = lehmer_code();
    Rank r = 0;
    for (int i = 0; i < n_; ++i) r = r * static_cast<Rank>(n_ - i) + code[i];
    return r;
  }

  std::string label() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (n_ >= 10 && i > 0) s.push_back('.');
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxSymbols> entries_{};
};

// Number of pairs i < j with s[i] > s[j].
template <typename T>
std::size_t inversions(std::span<const T> s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) count += s[i] > s[j];
  return count;
}

inline std::size_t inversions(const std::vector<int>& s) { return inversions(std::span<const int>(s)); }

// The n-1 permutations reachable by one adjacent swap, by swap position.
inline std::vector<Permutation> neighbors(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int i = 0; i + 1 < p.size(); ++i) out.push_back(p.swapped(i));
  return out;
}

// Ranks of neighbors(p), computed from p's Lehmer code without re-ranking.
// Swapping positions i, i+1 touches only Lehmer digits i and i+1.
inline std::vector<Rank> neighbor_ranks(const Permutation& p) {
  const int n = p.size();
  const auto code = p.lehmer_code();
  Rank base = 0;
  for (int i = 0; i < n; ++i) base = base * static_cast<Rank>(n - i) + code[i];
  std::vector<Rank> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    const bool ascent = p[i] < p[i + 1];
    const Rank hi = factorial(n - 1 - i);
    const Rank lo = factorial(n - 2 - i);
    // After the swap: digit i = old digit i+1 + [ascent], digit i+1 = old digit i - [descent].
    const std::int64_t new_i = code[i + 1] + (ascent ? 1 : 0);
    const std::int64_t new_i1 = code[i] - (ascent ? 0 : 1);
    const std::int64_t delta = (new_i - code[i]) * static_cast<std::int64_t>(hi) +
                               (new_i1 - code[i + 1]) * static_cast<std::int64_t>(lo);
    out.push_back(static_cast<Rank>(static_cast<std::int64_t>(base) + delta));
  }
  return out;
}

// v^1 .. v^{n+1}: symbol n+1 inserted at each slot, leftmost first.
inline std::vector<Permutation> expand_vertex(const Permutation& v) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(v.size() + 1));
  for (int slot = 0; slot <= v.size(); ++slot) out.push_back(v.with_max_inserted(slot));
  return out;
}

// True iff p and q differ by exactly one adjacent transposition.
inline bool adjacent_in_bn(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) return false;
  int first = -1;
  int diffs = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) {
      if (first < 0) first = i;
      ++diffs;
    }
  }
  return diffs == 2 && first + 1 < p.size() && p[first] == q[first + 1] && p[first + 1] == q[first];
}

}  // namespace bubblecross
