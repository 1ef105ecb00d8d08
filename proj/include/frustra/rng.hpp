#ifndef FRUSTRA_RNG_HPP
#define FRUSTRA_RNG_HPP

#include <cstdint>
#include <vector>

namespace frustra {

// SplitMix64 stream keyed by (seed, stream index). Every sampled tree gets its
// own stream, so results do not depend on how trees are sharded across
// workers. Hand-rolled instead of <random> because uniform_int_distribution
// output is implementation-defined and would break cross-platform determinism.
class TreeRng {
public:
  TreeRng(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // uniform in [0, n), rejection-sampled to avoid modulo bias
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

} // namespace frustra

#endif
