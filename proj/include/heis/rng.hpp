#pragma once

#include <cstdint>

// Deterministic seeding helpers. Derived seeds decorrelate parallel tasks
// while keeping every run reproducible from a single root seed.

namespace heis {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed for task `index` derived from `root`; stable across thread schedules.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0xd1342543de82ef95ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

}  // namespace heis
