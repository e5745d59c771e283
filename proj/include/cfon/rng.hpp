#pragma once

#include <cstdint>

namespace cfon {

// splitmix64 (Steele, Lea, Flood). Every random stream in the project is
// drawn from this generator so a seed maps to the same stream on every
// platform and build.
class SplitMix64 {
 public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1, via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return (next() >> 11) * 0x1.0p-53; }

 private:
    std::uint64_t state_;
};

// Child stream n of a seed: the splitmix64 finalizer applied to
// seed + (n+1) * golden-ratio increment. Used for per-round and
// per-escalation streams so one user seed reproduces a whole run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cfon
