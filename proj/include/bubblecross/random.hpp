#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace bubblecross {

// All randomized suites draw from std::mt19937_64. Its output sequence is
// fixed by the standard; the helpers below avoid the implementation-defined
// distributions so a seed reproduces the same cases on every platform.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20120917;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace bubblecross
