#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace augcolor {

inline constexpr std::string_view kVersion = "0.1.0";

// Size caps for exponential routines. All brute-force entry points read
// their defaults from here.
inline constexpr std::size_t kExactChromaticCap = 16;
inline constexpr std::size_t kMaxIndependentSetCap = 40;
inline constexpr std::size_t kCountIndependentSetsCap = 30;
inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

} // namespace augcolor
