#pragma once

#include "augcolor/graph.hpp"

#include <cstdint>
#include <string_view>

namespace augcolor {

// Every random stream in the library is SplitMix64 seeded from a Seed.
inline constexpr std::string_view kRngName = "splitmix64";

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Master seed plus the stream-derivation rule: derive(i) is a stable hash of
/// (value, i), so a trial's stream never depends on execution order.
struct Seed {
    std::uint64_t value = 0;

    constexpr Seed derive(std::uint64_t index) const
    {
        return Seed{mix64(value ^ mix64(index + 0x9e3779b97f4a7c15ULL))};
    }

    friend constexpr bool operator==(Seed, Seed) = default;
};

class SplitMix64 {
public:
    explicit constexpr SplitMix64(Seed seed) : state_(seed.value) {}

    constexpr std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0, 1) with 53 bits of resolution.
    constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Fisher-Yates with SplitMix64; portable across standard libraries, unlike
// std::shuffle.
void shuffle(std::vector<Vertex>& items, Seed seed);

enum class SamplingMode {
    canonical,      // one uniform per pair (u < v) in lexicographic order
    geometric_skip, // jumps over absent pairs; only used for p < 0.1
};

// G(n, p). Throws InputError when p is outside [0, 1] or n == 0. In
// geometric_skip mode p >= 0.1 still takes the canonical path.
Graph sample_gnp(std::size_t n, double p, Seed seed,
                 SamplingMode mode = SamplingMode::canonical);

// host ∪ G(host.order(), p).
Graph augment(const Graph& host, double p, Seed seed,
              SamplingMode mode = SamplingMode::canonical);

} // namespace augcolor
