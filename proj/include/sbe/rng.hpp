#ifndef SBE_RNG_HPP
#define SBE_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace sbe {

// splitmix64 finalizer, used both for seed mixing and test-batch derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-cell seed for sweep cell (m, run): chained splitmix64, so any single
// row of a sweep is reproducible in isolation.
constexpr std::uint64_t run_seed(std::uint64_t base, std::uint64_t m, std::uint64_t run) {
    return splitmix64(splitmix64(splitmix64(base) ^ m) ^ run);
}

// Uniform draw from [0, bound) by rejection. mt19937_64 output is pinned by
// the standard, so the whole sampling pipeline is stable across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound; // 2^64 mod bound
    std::uint64_t x = gen();
    while (x < min) x = gen();
    return x % bound;
}

// Fisher-Yates over the first `prefix` positions.
template <typename T>
void shuffle_prefix(std::vector<T>& v, std::size_t prefix, std::mt19937_64& gen) {
    const std::size_t count = std::min(prefix, v.size());
    for (std::size_t i = 0; i < count && i + 1 < v.size(); ++i) {
        std::size_t j = i + uniform_below(gen, v.size() - i);
        std::swap(v[i], v[j]);
    }
}

template <typename T>
void shuffle_all(std::vector<T>& v, std::mt19937_64& gen) {
    shuffle_prefix(v, v.size(), gen);
}

} // namespace sbe

#endif
