#pragma once

// Tiny deterministic PRNG (splitmix64).  Used for seeded orientations and
// sweep sampling; unlike <random> distributions its stream is identical on
// every platform, which the byte-identical report contract depends on.

#include <cstdint>
#include <vector>

namespace woi {

class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); n >= 1.  Modulo bias is irrelevant at the
  // alphabet sizes used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[below(pool.size())];
  }

private:
  std::uint64_t state_;
};

}  // namespace woi
