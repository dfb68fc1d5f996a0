#ifndef DIRDIAM_RANDOM_HPP_
#define DIRDIAM_RANDOM_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace dirdiam {

/// One step of the SplitMix64 mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent child seed for stream `tag` of `seed`.
constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(tag + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

/// `count` draws from [0, n) with replacement, sorted and deduplicated.
template <class T>
std::vector<T> sample_with_replacement(Rng &rng, std::uint64_t n, std::uint64_t count) {
    std::vector<T> out;
    if (n == 0) {
        return out;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(static_cast<T>(pick(rng)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace dirdiam

#endif // DIRDIAM_RANDOM_HPP_
