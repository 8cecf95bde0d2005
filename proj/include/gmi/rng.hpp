#pragma once

#include <cstdint>

namespace gmi {

/// splitmix64: tiny, fully specified PRNG so seeded runs are reproducible
/// across platforms and standard-library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return double(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return (next() & 1) != 0; }

    /// Decorrelated stream for a substream id.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 s(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
        return s.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace gmi
