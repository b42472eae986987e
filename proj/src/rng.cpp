#include "dtor/rng.hpp"

#include <stdexcept>

namespace dtor {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng::Rng(std::uint64_t seed, std::string_view suite) : g_(splitmix64(seed ^ fnv1a(suite))) {}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = g_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Q Rng::positive_rational(long max_num, long max_den) {
    Q x(uniform(1, max_num), uniform(1, max_den));
    x.canonicalize();
    return x;
}

}  // namespace dtor
