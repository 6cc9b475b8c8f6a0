#pragma once

#include <cstdint>

namespace tribell {

// SplitMix64 (Sebastiano Vigna, public domain). Chosen because its output
// sequence is fixed by the algorithm alone, so seeded runs are reproducible
// bit-for-bit on every platform, and child streams can be split off cheaply
// by seeding a new instance with an output of the parent.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform double in [0, hi).
    double uniform(double hi) { return uniform() * hi; }

  private:
    std::uint64_t state_;
};

} // namespace tribell
