#pragma once

#include <coorbit/rational.hpp>

#include <cstdint>

namespace coorbit {

/// splitmix64 stream.  Self-contained so that seeded runs reproduce the same
/// samples on every platform and standard library.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.  Modulo bias is irrelevant at the
    /// range sizes used here.
    int64_t next_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next() % span);
    }

    /// Small integer rational, the workhorse for randomized covectors.
    Rat next_small_rational(int64_t bound = 9) { return Rat(next_int(-bound, bound)); }

    double next_unit_double() { return (next() >> 11) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

}  // namespace coorbit
