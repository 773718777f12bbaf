#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace scopegate {

// splitmix64. All randomness in the library flows through this generator
// instead of <random> engines and distributions, whose sequences differ
// between standard library implementations. Fixed seed -> identical output
// on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound). bound must be > 0.
  uint64_t next_below(uint64_t bound) {
    const uint64_t threshold = -bound % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Independent seed for sub-task `stream` of a run seeded with `master`.
// Stream 0 is reserved for the task that consumes the master seed directly.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  SplitMix64 g(master + 0x9E3779B97F4A7C15ull * (stream + 1));
  return g.next();
}

// Fisher-Yates using the deterministic generator above.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace scopegate
