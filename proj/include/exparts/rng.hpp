// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace exparts {

// Counter-based generator: the output at draw t is a pure mix of
// (seed, stream, t), so identical (seed, stream) reproduce identical draw
// sequences across runs and platforms, and distinct streams are independent
// without shared state.
class RngHandle {
 public:
  explicit RngHandle(uint64_t seed, uint64_t stream = 0)
      : key_(mix(seed ^ 0x2545F4914F6CDD1Dull) ^ mix(stream + 0x9E3779B97F4A7C15ull)) {}

  uint64_t seed_key() const { return key_; }
  uint64_t counter() const { return counter_; }

  uint64_t next_u64() {
    uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    return mix(z);
  }

  // Uniform on {0, ..., bound-1}, rejection-sampled so the law is exact and
  // platform independent.
  uint64_t uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform draw from an empty range");
    uint64_t limit = bound * (~uint64_t{0} / bound);
    uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return r % bound;
  }

  // Fisher-Yates image of a uniform permutation of {1,...,n}.
  std::vector<int> uniform_permutation_image(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    for (int i = n; i >= 2; --i) {
      auto j = static_cast<size_t>(uniform_below(static_cast<uint64_t>(i)));
      std::swap(img[static_cast<size_t>(i - 1)], img[j]);
    }
    return img;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace exparts
