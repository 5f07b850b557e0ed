#include "fflab/ff/random.hpp"

#include <numeric>

namespace fflab {

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view id, std::uint64_t trial) {
    std::uint64_t h = fnv1a64(id);
    return splitmix64(splitmix64(master ^ h) + trial);
}

std::vector<std::uint64_t> Rng::sample(std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) k = n;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t j = i + eng_() % (n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

} // namespace fflab
