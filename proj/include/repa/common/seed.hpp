#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace repa {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Derives an independent seed from a parent seed, a stage name and indices.
/// Adding a new stage name never changes the seeds of existing stages.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view stage,
                                    std::initializer_list<std::uint64_t> indices = {}) {
    std::uint64_t h = splitmix64(parent ^ fnv1a(stage));
    for (std::uint64_t i : indices) {
        h = splitmix64(h ^ splitmix64(i + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace repa
