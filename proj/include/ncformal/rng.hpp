#pragma once

#include <cstdint>

namespace ncformal {

// splitmix64: tiny deterministic generator. Used instead of <random> so that
// seeded runs are byte-identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at test scale.
    long next_long(long lo, long hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    int next_int(int lo, int hi) { return static_cast<int>(next_long(lo, hi)); }

    bool next_bool() { return (next_u64() & 1) != 0; }

  private:
    std::uint64_t state_;
};

}  // namespace ncformal
