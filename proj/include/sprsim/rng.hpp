#pragma once

#include <cstdint>
#include <random>

namespace sprsim {

// Every random quantity is drawn from a stream keyed by (master seed, trial,
// stream id). Trials can therefore run in any order, on any thread count, and
// still reproduce byte-identical output.
inline std::mt19937_64 make_rng(std::uint64_t master_seed, std::uint64_t trial,
                                std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

namespace streams {
inline constexpr std::uint64_t kUserDrop = 1;
inline constexpr std::uint64_t kShadowing = 2;
// Per inner fading draw d: kFading + d, kPilotNoise + d.
inline constexpr std::uint64_t kFading = 0x1000;
inline constexpr std::uint64_t kPilotNoise = 0x100000;
}  // namespace streams

}  // namespace sprsim
