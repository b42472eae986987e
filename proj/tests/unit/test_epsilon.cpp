#include <gtest/gtest.h>

#include <random>

#include "dtor/epsilon.hpp"
#include "oracles/eps_brute.hpp"

using namespace dtor;

namespace {

Q frac(long a, long b) {
    Q x(a, b);
    x.canonicalize();
    return x;
}

}  // namespace

TEST(Epsilon, Examples) {
    EXPECT_EQ(eps_oracle(2, 1, {}, Q(5, 3)), Q(5, 3));
    EXPECT_EQ(eps_oracle(2, 1, {Q(1)}, Q(1)), 1);
    EXPECT_EQ(eps_oracle(2, 1, {Q(1)}, Q(2)), 3);
    EXPECT_EQ(eps1_closed(2, 1, Q(1), Q(2)), 3);
    EXPECT_EQ(eps1_closed(3, 2, Q(5), Q(4)), 4);
    EXPECT_EQ(delta(2, 1, {Q(3)}), 1);
    EXPECT_EQ(delta(2, 1, {}), 0);
}

TEST(Epsilon, OracleAgainstBruteForce) {
    std::mt19937_64 g(1);
    for (int t = 0; t < 120; ++t) {
        long q = t % 2 ? 2 : 3;
        int r = 1 + t % 2;
        size_t n = t % 3;
        QVec s;
        for (size_t i = 0; i < n; ++i) s.push_back(frac(1 + static_cast<long>(g() % 6), 1 + static_cast<long>(g() % 2)));
        Q x = frac(1 + static_cast<long>(g() % 12), 1 + static_cast<long>(g() % 3));
        EXPECT_EQ(eps_oracle(q, r, s, x), oracle::eps_brute(q, r, s, x));
    }
}

TEST(Epsilon, ClosedEqualsOracle) {
    std::mt19937_64 g(2);
    for (int t = 0; t < 300; ++t) {
        long q = t % 2 ? 2 : 3;
        int r = 1 + t % 3;
        size_t n = t % 4;
        QVec s;
        for (size_t i = 0; i < n; ++i) s.push_back(frac(1 + static_cast<long>(g() % 64), 1 + static_cast<long>(g() % 4)));
        Q x = frac(1 + static_cast<long>(g() % 64), 1 + static_cast<long>(g() % 4));
        auto c = eps_closed(q, r, s, x);
        EXPECT_FALSE(c.fallback);
        EXPECT_EQ(c.value, eps_oracle(q, r, s, x));
        EXPECT_EQ(eps_hat_closed(q, r, s, x).value, eps_hat_oracle(q, r, s, x));
        EXPECT_EQ(delta(q, r, s), delta_oracle(q, r, s));
    }
}

TEST(Epsilon, MonotoneAndInverse) {
    std::mt19937_64 g(3);
    for (int t = 0; t < 100; ++t) {
        long q = t % 2 ? 2 : 3;
        int r = 1 + t % 2;
        QVec s;
        for (int i = 0; i < t % 4; ++i) s.push_back(Q(1 + static_cast<long>(g() % 20)));
        Q x = frac(1 + static_cast<long>(g() % 200), 1 + static_cast<long>(g() % 5));
        Q y = eps(q, r, s, x);
        EXPECT_EQ(eps_inverse(q, r, s, y), x);
        EXPECT_LT(y, eps(q, r, s, x + Q(1, 7)));
        if (!s.empty() && x <= *std::min_element(s.begin(), s.end())) EXPECT_EQ(y, x);
    }
}
