#include "coolsim/rng.hpp"

#include <cassert>
#include <cmath>

namespace coolsim {

double SplitMix64::next_gaussian() {
    // Box-Muller, cosine branch only. u1 is shifted into (0, 1] so the log
    // argument never vanishes.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

std::size_t SplitMix64::next_index(std::size_t n) {
    assert(n > 0);
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 g(seed ^ (0xd1342543de82ef95ULL * (tag + 1)));
    return g.next_u64();
}

} // namespace coolsim
