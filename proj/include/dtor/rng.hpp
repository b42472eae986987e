#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "dtor/rational.hpp"

namespace dtor {

// mt19937_64 seeded by splitmix64(seed ^ fnv1a(suite)). Bounded draws use
// rejection sampling rather than std distributions, whose output is not
// fixed across standard library implementations.
class Rng {
public:
    Rng(std::uint64_t seed, std::string_view suite);
    std::uint64_t next() { return g_(); }
    // uniform in [lo, hi]
    long uniform(long lo, long hi);
    // p/q with 1 <= p <= max_num, 1 <= q <= max_den, reduced
    Q positive_rational(long max_num, long max_den);

private:
    std::mt19937_64 g_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view s);

}  // namespace dtor
