#include <gtest/gtest.h>

#include <random>

#include "dtor/bruhat_tits.hpp"

using namespace dtor;

namespace {

const Fq& F2 = Fq::get(2);

RatFunc pw(const Fq& F, int k) { return RatFunc::x_power(F, k); }

std::vector<RatFunc> vec(const Fq& F, std::initializer_list<int> exps) {
    std::vector<RatFunc> v;
    for (int e : exps) v.push_back(e == 99 ? RatFunc::zero(F) : pw(F, e));
    return v;
}

// x in pi^k L for diagonal L, coordinatewise
bool in_scaled(const Lattice& L, const std::vector<RatFunc>& x, long k) {
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && x[i].valuation() < L.exponents()[i] + k) return false;
    return true;
}

long norm_scan(const Lattice& L, const std::vector<RatFunc>& x) {
    for (long k = 60; k >= -60; --k)
        if (in_scaled(L, x, k)) return -k;
    throw std::logic_error("scan range");
}

RatFunc random_rf(const Fq& F, std::mt19937_64& g) {
    std::uniform_int_distribution<int> c(0, F.q() - 1), dg(0, 2), sh(-2, 2);
    std::vector<int> cs(dg(g) + 1);
    for (auto& x : cs) x = c(g);
    Poly p(F, cs);
    if (p.is_zero()) p = Poly::constant(F, 1);
    return RatFunc(p) * pw(F, sh(g));
}

std::vector<RatFunc> random_vec(const Fq& F, int n, std::mt19937_64& g) {
    std::vector<RatFunc> v;
    for (int i = 0; i < n; ++i) v.push_back(random_rf(F, g));
    return v;
}

// invertible matrix over F_q[pi]
RMatrix random_gl(const Fq& F, int n, std::mt19937_64& g) {
    for (;;) {
        RMatrix m(n, std::vector<RatFunc>(n, RatFunc::zero(F)));
        std::uniform_int_distribution<int> c(0, F.q() - 1);
        for (auto& row : m)
            for (auto& x : row) x = RatFunc(Poly(F, {c(g), c(g)}));
        if (rf_rank(m) == n) return m;
    }
}

Lattice transform(const Fq& F, const RMatrix& g, const Lattice& L) {
    return Lattice::from_basis(rf_mul(g, L.basis(F)));
}

Simplex random_diag_set(std::mt19937_64& g, int n, int size) {
    std::uniform_int_distribution<int> d(0, 2);
    Simplex S;
    for (int i = 0; i < size; ++i) {
        std::vector<long> a(n);
        for (auto& x : a) x = d(g);
        S.push_back(Lattice::diagonal(a));
    }
    return S;
}

ZVec z(std::initializer_list<long> l) {
    ZVec v;
    for (long x : l) v.push_back(Z(x));
    return v;
}

}  // namespace

TEST(Lattice, NormExamples) {
    EXPECT_EQ(lattice_norm(F2, Lattice::diagonal({0, 0}), vec(F2, {0, 1})), 1);
    EXPECT_EQ(lattice_norm(F2, Lattice::diagonal({0, 1}), vec(F2, {99, 0})), 2);
    auto L = Lattice::diagonal({0, 1});
    auto x = vec(F2, {3, -1});
    EXPECT_EQ(lattice_norm_exp(F2, L.scaled(1), x), lattice_norm_exp(F2, L, x) + 1);
    EXPECT_THROW(lattice_norm(F2, L, vec(F2, {99, 99})), std::invalid_argument);
}

TEST(Lattice, NormAgainstScanAndBasisChange) {
    std::mt19937_64 g(11);
    std::uniform_int_distribution<int> d(-2, 3);
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        for (int t = 0; t < 60; ++t) {
            int n = 2 + t % 2;
            std::vector<long> a(n);
            for (auto& e : a) e = d(g);
            Lattice L = Lattice::diagonal(a);
            auto x = random_vec(F, n, g);
            long e = lattice_norm_exp(F, L, x);
            EXPECT_EQ(e, norm_scan(L, x));
            // the same lattice, presented by a basis differing by GL_n(F_q[pi]) with unit determinant
            RMatrix u(n, std::vector<RatFunc>(n, RatFunc::zero(F)));
            for (int i = 0; i < n; ++i) u[i][i] = RatFunc::one(F);
            u[0][n - 1] = RatFunc(Poly(F, {1, 1, 1}));
            Lattice M = Lattice::from_basis(rf_mul(L.basis(F), u));
            EXPECT_EQ(lattice_norm_exp(F, M, x), e);
            EXPECT_TRUE(same_class(F, L, M));
        }
    }
}

TEST(Chain, StandardSimplex) {
    for (int n = 1; n <= 4; ++n) {
        auto S = standard_simplex(n);
        std::reverse(S.begin() + 1, S.end());
        auto res = chain_test(F2, S);
        ASSERT_TRUE(res.simplex);
        ASSERT_EQ(res.chain.size(), static_cast<size_t>(n));
        // chain L^0 > L^1 > ... > L^{n-1} > m L^0
        auto want = standard_simplex(n);
        for (int i = 0; i < n; ++i) EXPECT_EQ(diagonal_class(res.chain[i]), diagonal_class(want[i]));
    }
}

TEST(Chain, IncomparablePairHasViolation) {
    Simplex S = {Lattice::diagonal({0, 1}), Lattice::diagonal({1, 0})};
    auto res = chain_test(F2, S);
    EXPECT_FALSE(res.simplex);
    // (0,1) and (1,0) are adjacent as classes only if the spread is <= 1; here it is 2
    ASSERT_FALSE(res.x.empty());
    EXPECT_TRUE(violates_c(F2, S, res.x, res.y));
    EXPECT_TRUE(chain_test(F2, {Lattice::diagonal({3, 1, 4})}).simplex);
}

TEST(Chain, RandomAgainstConditionC) {
    std::mt19937_64 g(5);
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        for (int t = 0; t < 80; ++t) {
            int n = 2 + t % 2;
            Simplex S = random_diag_set(g, n, 2 + t % 3);
            auto res = chain_test(F, S);
            if (res.simplex) {
                for (size_t i = 0; i + 1 < res.chain.size(); ++i)
                    EXPECT_GE(containment_level(F, res.chain[i], res.chain[i + 1]), 0);
                EXPECT_GE(containment_level(F, res.chain.back(), res.chain[0].scaled(1)), 0);
                for (int k = 0; k < 40; ++k) EXPECT_FALSE(violates_c(F, S, random_vec(F, n, g), random_vec(F, n, g)));
            } else {
                ASSERT_FALSE(res.x.empty());
                EXPECT_TRUE(violates_c(F, S, res.x, res.y));
            }
        }
    }
}

TEST(Chain, GeneralLatticesInvariantUnderGl) {
    std::mt19937_64 g(9);
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        for (int t = 0; t < 30; ++t) {
            int n = 2 + t % 2;
            Simplex S = random_diag_set(g, n, 3);
            RMatrix m = random_gl(F, n, g);
            Simplex T;
            for (const auto& L : S) T.push_back(transform(F, m, L));
            auto a = chain_test(F, S), b = chain_test(F, T);
            EXPECT_EQ(a.simplex, b.simplex);
            if (a.simplex) EXPECT_EQ(a.chain.size(), b.chain.size());
            auto x = random_vec(F, n, g);
            auto gx = rf_apply(m, x);
            EXPECT_EQ(lattice_norm_exp(F, S[0], x), lattice_norm_exp(F, T[0], gx));
        }
    }
}

TEST(SimplexCone, KnownCones) {
    for (long q : {2, 3}) {
        for (int n = 2; n <= 4; ++n) {
            std::vector<ZVec> ineqs;
            for (int i = 0; i + 1 < n; ++i) {
                ZVec a(n, 0);
                a[i] = -1;
                a[i + 1] = 1;
                ineqs.push_back(a);
            }
            ZVec top(n, 0);
            top[0] = q;
            top[n - 1] = -1;
            ineqs.push_back(top);
            EXPECT_EQ(simplex_cone(q, standard_simplex(n)), Cone::from_ineqs(n, ineqs));
        }
        for (int h = 1; h <= 4; ++h) {
            Cone want = Cone::from_ineqs(2, {z({-qpow_int(q, h - 1).get_num().get_si(), 1}), z({qpow_int(q, h).get_num().get_si(), -1})});
            EXPECT_EQ(simplex_cone(q, ap2_edge(h)), want);
        }
        auto v = Simplex{Lattice::diagonal({2, 0, 1})};
        EXPECT_EQ(simplex_cone(q, v), Cone::from_rays_q(3, {lattice_weights(q, v[0])}));
        EXPECT_EQ(simplex_cone_r(q, 2, ap2_edge(2)), simplex_cone(q * q, ap2_edge(2)));
    }
}

TEST(SimplexCone, RealizationMembership) {
    long q = 2;
    auto S1 = ap2_edge(1), S2 = ap2_edge(2);
    EXPECT_TRUE(realization_membership(q, S1, lattice_weights(q, S1[0])));
    QVec mid = {Q(1), Q(3, 2)};
    EXPECT_TRUE(realization_membership(q, S1, mid));
    EXPECT_FALSE(realization_membership(q, S2, mid));
    QVec mid2 = {Q(1), Q(3)};
    EXPECT_FALSE(realization_membership(q, S1, mid2));
    EXPECT_TRUE(realization_membership(q, S2, mid2));
    EXPECT_FALSE(realization_membership(q, S1, QVec{Q(3), Q(1)}));
}

TEST(SimplexCone, LatticePointsRecoverClasses) {
    for (long q : {2, 3}) {
        std::vector<Simplex> simp = {standard_simplex(3), {Lattice::diagonal({0, 0, 1}), Lattice::diagonal({0, 1, 1})},
                                     {Lattice::diagonal({0, 1, 2}), Lattice::diagonal({0, 1, 3})}};
        for (const auto& S : simp) {
            Cone c = simplex_cone(q, S);
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; b <= 3; ++b) {
                    Lattice L = Lattice::diagonal({0, a, b});
                    bool member = false;
                    for (const auto& M : S) member |= diagonal_class(M) == diagonal_class(L);
                    EXPECT_EQ(c.contains(lattice_weights(q, L)), member) << L.str();
                }
            // nonnegative combinations stay inside
            QVec w(3, 0);
            for (size_t i = 0; i < S.size(); ++i) {
                auto s = lattice_weights(q, S[i]);
                for (int j = 0; j < 3; ++j) w[j] += Q(static_cast<long>(i + 1)) * s[j];
            }
            EXPECT_TRUE(c.interior_contains(w));
        }
    }
}

TEST(SimplexCone, IntersectionProperty) {
    long q = 2;
    auto same = intersection_property_check(q, ap2_edge(2), ap2_edge(2));
    EXPECT_TRUE(same.holds);
    auto adj = intersection_property_check(q, ap2_edge(2), ap2_edge(3));
    EXPECT_FALSE(adj.empty);
    EXPECT_TRUE(adj.holds);
    EXPECT_EQ(adj.lhs, Cone::from_rays(2, {z({1, 4})}));
    auto far = intersection_property_check(q, ap2_edge(1), ap2_edge(3));
    EXPECT_TRUE(far.empty);
    EXPECT_TRUE(far.holds);
    auto S = standard_simplex(3);
    Simplex T = {S[1], S[2], Lattice::diagonal({0, 1, 2})};
    ASSERT_TRUE(chain_test(F2, T).simplex);
    EXPECT_TRUE(intersection_property_check(q, S, T).holds);
}
