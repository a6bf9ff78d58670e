#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace isp {

/// Spatial point; x[1] is unused (zero) for 1D meshes.
using Point = std::array<double, 2>;

/// SplitMix64 generator. Fixed algorithm so that noise streams are
/// reproducible across platforms and standard-library versions.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1,1).
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

/// FNV-1a 64-bit hash, used for output-file checksums in run manifests.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace isp
