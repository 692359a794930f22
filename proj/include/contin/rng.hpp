#pragma once

#include <cstdint>

namespace contin {

// splitmix64: tiny, seedable, identical stream on every platform.  All seeded
// sampling in the project goes through this so runs are reproducible.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64()) * 0x1p-64;
    }

  private:
    std::uint64_t state_;
};

}  // namespace contin
