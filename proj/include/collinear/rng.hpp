#pragma once

#include <cstdint>
#include <vector>

namespace collinear {

// splitmix64. Fixed algorithm so seeded runs reproduce bit-for-bit; the
// standard <random> distributions are implementation-defined and would not.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [lo, hi] by rejection.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t reject_below = (0 - span) % span;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= reject_below) return lo + static_cast<std::int64_t>(r % span);
    }
  }

 private:
  std::uint64_t state_;
};

template <class T>
void fisher_yates(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.in_range(0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace collinear
