#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace attrib {

// Deterministic, portable randomness. std::mt19937_64 output is bit-exact
// across implementations; std::uniform_int_distribution and std::shuffle are
// not, so bounded draws use rejection sampling and shuffles are Fisher-Yates
// over those draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be >= 1.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[bounded(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace attrib
