#pragma once

#include <cstdint>
#include <vector>

namespace posalg {

/// SplitMix64. The stream is fixed by the update
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// and every derived draw below is defined in terms of next(), so any
/// implementation reproduces the same instances from the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// lo + next() mod (hi - lo + 1).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// next() mod den < num.
  bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

  /// Fisher-Yates from the top: for i = n-1 down to 1 swap p[i], p[uniform(0, i)].
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i-- > 1;) {
      const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i)));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace posalg
