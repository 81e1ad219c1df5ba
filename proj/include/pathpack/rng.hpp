#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathpack/errors.hpp"

// Deterministic randomness helpers. All sampling is hand-rolled on top of
// std::mt19937_64 so that a seed produces identical streams regardless of
// the standard library's distribution implementations.

namespace pathpack {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based seed split: stream `index` of `master`. Used to give
// benchmark samples, algorithms, and per-iteration decode rounds
// independent reproducible streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0xA0761D6478BD642FULL * (index + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, bound), bound > 0. Unbiased (Lemire rejection).
  std::uint32_t below(std::uint32_t bound) {
    PATHPACK_REQUIRE(bound > 0, "Rng::below requires a positive bound");
    std::uint64_t x = next_u64();
    unsigned __int128 m = (unsigned __int128)x * bound;
    auto lo = (std::uint64_t)m;
    if (lo < bound) {
      std::uint64_t t = (0ULL - std::uint64_t(bound)) % bound;
      while (lo < t) {
        x = next_u64();
        m = (unsigned __int128)x * bound;
        lo = (std::uint64_t)m;
      }
    }
    return (std::uint32_t)(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(std::uint32_t(i))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pathpack
