#pragma once

#include <cstdint>
#include <random>

namespace dsm {

// Deterministic keyed RNG streams. A stream is fully determined by up to
// three 64-bit keys (e.g. global seed, node id, round), so concurrent
// callers with distinct keys never share state and replay is exact.
class RngStream {
 public:
  explicit RngStream(std::uint64_t k0, std::uint64_t k1 = 0,
                     std::uint64_t k2 = 0)
      : gen_(derive_seed(k0, k1, k2)) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), rejection-sampled (no modulo bias).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double prob) { return uniform() < prob; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive_seed(std::uint64_t k0, std::uint64_t k1,
                                   std::uint64_t k2) {
    std::uint64_t s = k0;
    std::uint64_t h = splitmix64(s);
    s ^= k1 + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= k2 + 0xc2b2ae3d27d4eb4fULL;
    h ^= splitmix64(s);
    return h;
  }

  std::mt19937_64 gen_;
};

}  // namespace dsm
