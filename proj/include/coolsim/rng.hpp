#pragma once

#include <cstddef>
#include <cstdint>

namespace coolsim {

/// Deterministic uniform generator (SplitMix64). Every stochastic element of
/// a simulation run draws from one of these, so a seed reproduces a run
/// bit-for-bit. Gaussians come from Box-Muller on two uniforms per draw;
/// bounded integers use rejection sampling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double next_gaussian();

    /// Uniform integer in [0, n); n must be positive.
    std::size_t next_index(std::size_t n);

private:
    std::uint64_t state_;
};

/// Fans one scenario seed out into independent substreams. Weather uses a
/// stream derived from the seed alone, so runs that share a seed see the
/// same weather no matter which scheme they execute; scheme-internal
/// randomness (auction rationing) lives on its own stream.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag);

inline constexpr std::uint64_t kWeatherStreamTag = 1;
inline constexpr std::uint64_t kSchemeStreamTag = 2;

} // namespace coolsim
