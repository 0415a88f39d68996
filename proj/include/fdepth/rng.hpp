#pragma once

#include <cstdint>
#include <random>

namespace fdepth {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hierarchical stream key: every unit of work derives its own generator from
// (seed, tags...), so results never depend on evaluation order or worker count.
struct StreamKey {
    uint64_t state = 0;

    StreamKey child(uint64_t tag) const {
        return {splitmix64(state ^ splitmix64(tag + 0x632be59bd9b4e019ULL))};
    }

    std::mt19937_64 rng() const { return std::mt19937_64(state); }
};

// Stream purposes; fixed values keep seeds stable across releases.
namespace stream {
inline constexpr uint64_t data = 1;
inline constexpr uint64_t partition = 2;
inline constexpr uint64_t base_noise = 3;
inline constexpr uint64_t rough_noise = 4;
inline constexpr uint64_t contamination = 5;
}  // namespace stream

}  // namespace fdepth
