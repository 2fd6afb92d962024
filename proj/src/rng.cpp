#include "dialeval/rng.hpp"

#include <algorithm>

namespace dialeval {

std::vector<std::size_t> seeded_permutation(std::size_t m, std::uint64_t seed) {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = m; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

std::vector<std::size_t> seeded_index_sample(std::size_t m, std::size_t count, std::uint64_t seed) {
    if (count > m) count = m;
    std::vector<std::size_t> perm = seeded_permutation(m, seed);
    perm.resize(count);
    std::sort(perm.begin(), perm.end());
    return perm;
}

std::vector<std::size_t> seeded_index_sample_with_replacement(std::size_t m, std::size_t count,
                                                              std::uint64_t seed) {
    std::vector<std::size_t> out(count);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::size_t>(rng() % m);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dialeval
