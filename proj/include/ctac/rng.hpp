#pragma once

#include <cstdint>
#include <random>

namespace ctac {

// Deterministic RNG. mt19937_64 output is pinned by the standard and the
// double/int draws below avoid std distributions, whose sequences are
// implementation defined, so streams reproduce bit-for-bit everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): 53 mantissa bits of the raw draw.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift rejection-free mapping; negligible bias for n << 2^64
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

  private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer, used to derive per-sample sub-seeds from
// (master seed, sample index) so parallel and serial runs agree.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ctac
