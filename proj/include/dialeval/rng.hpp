#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dialeval {

// All seeded randomness in this project goes through the helpers below so
// that results are reproducible bit-for-bit from the documented recipe:
//
//   * the stream generator is std::mt19937_64 (fully specified by the
//     standard), seeded directly with the given 64-bit seed;
//   * bounded draws use the modulo method, draw() % bound;
//   * permutations use Fisher-Yates: for i from m-1 down to 1, swap
//     position i with position draw() % (i + 1);
//   * index samples take the first `count` entries of a Fisher-Yates
//     shuffle of [0, m) and sort them ascending;
//   * derived seeds chain splitmix64: s = splitmix64(master), then
//     s = splitmix64(s ^ a), then s = splitmix64(s ^ b).

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return s;
}

// Uniform permutation of [0, m). perm[i] is the source index moved to slot i.
std::vector<std::size_t> seeded_permutation(std::size_t m, std::uint64_t seed);

// `count` distinct positions from [0, m), ascending.
std::vector<std::size_t> seeded_index_sample(std::size_t m, std::size_t count, std::uint64_t seed);

// Same, but sampled independently with replacement (duplicates possible).
std::vector<std::size_t> seeded_index_sample_with_replacement(std::size_t m, std::size_t count,
                                                              std::uint64_t seed);

}  // namespace dialeval
