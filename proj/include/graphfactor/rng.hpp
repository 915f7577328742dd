#pragma once

#include <cstdint>

namespace graphfactor {

/// SplitMix64. Chosen over <random> engines+distributions because the byte
/// stream must be identical across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound). Modulo bias is irrelevant at desk
    /// scale; determinism is the contract.
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

    bool chance(std::uint64_t one_in) { return bounded(one_in) == 0; }

private:
    std::uint64_t state_;
};

/// Stable seed mixing for derived streams (per-graph, per-pattern seeds).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 s(a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
    return s.next();
}

} // namespace graphfactor
