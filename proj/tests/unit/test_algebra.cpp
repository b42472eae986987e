#include <gtest/gtest.h>

#include <random>

#include "dtor/additive.hpp"
#include "dtor/newton.hpp"
#include "dtor/ratfunc.hpp"
#include "oracles/dense.hpp"

using namespace dtor;

namespace {

Laurent tpow(const Fq& F, long e) { return Laurent::monomial(F, 1, e); }

Laurent rand_exact(const Fq& F, std::mt19937_64& g, long lo, int len) {
    std::vector<int> c(len);
    for (auto& x : c) x = static_cast<int>(g() % F.q());
    return Laurent::from_coeffs(F, lo, c);
}

}  // namespace

TEST(Field, AxiomsSmallQ) {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        const Fq& F = Fq::get(q);
        for (int a = 0; a < q; ++a) {
            EXPECT_EQ(F.add(a, F.neg(a)), 0);
            if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
            for (int b = 0; b < q; ++b) {
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
                // Frobenius is additive
                EXPECT_EQ(F.pow(F.add(a, b), F.p()), F.add(F.pow(a, F.p()), F.pow(b, F.p())));
                for (int c = 0; c < q; ++c) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

TEST(Field, RejectsNonPrimePower) {
    EXPECT_FALSE(Fq::is_prime_power(6));
    EXPECT_FALSE(Fq::is_prime_power(12));
    EXPECT_TRUE(Fq::is_prime_power(27));
    EXPECT_THROW(Fq::get(10), std::invalid_argument);
}

TEST(Poly, AbsValue) {
    const Fq& F2 = Fq::get(2);
    const Fq& F3 = Fq::get(3);
    EXPECT_EQ(abs_value(Poly(F2)), 0);
    EXPECT_EQ(abs_value(Poly::X(F2)), 2);
    EXPECT_EQ(abs_value(Poly::parse(F3, "T^3+T")), 27);
}

TEST(Poly, AbsValueMultiplicativeUltrametric) {
    const Fq& F = Fq::get(3);
    auto all = polys_below_degree(F, 3);
    for (size_t i = 0; i < all.size(); i += 3)
        for (size_t j = 0; j < all.size(); j += 5) {
            EXPECT_EQ(abs_value(all[i] * all[j]), abs_value(all[i]) * abs_value(all[j]));
            EXPECT_LE(abs_value(all[i] + all[j]), std::max(abs_value(all[i]), abs_value(all[j])));
        }
}

TEST(Poly, DivmodRoundTrip) {
    const Fq& F = Fq::get(5);
    Poly a = Poly::parse(F, "3*T^5+T^2+4"), b = Poly::parse(F, "2*T^2+T+1");
    Poly qq, r;
    a.divmod(b, qq, r);
    EXPECT_EQ(qq * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
}

TEST(Laurent, Basics) {
    const Fq& F = Fq::get(2);
    Laurent x = Laurent::from_coeffs(F, 1, {1, 1});
    Laurent y = x * tpow(F, -1);
    EXPECT_EQ(y.valuation(), 0);
    EXPECT_TRUE(y.agrees(Laurent::from_coeffs(F, 0, {1, 1})));
    Laurent i = tpow(F, 2).inv();
    EXPECT_TRUE(i.is_exact());
    EXPECT_EQ(i.valuation(), -2);
    Laurent u = Laurent::from_coeffs(F, 0, {1, 1});
    Laurent ui = u.inv(20);
    Laurent prod = u * ui;
    EXPECT_EQ(prod.precision(), 20);
    EXPECT_TRUE(prod.agrees(Laurent::one(F)));
    EXPECT_THROW(Laurent::zero(F, 5).inv(), PrecisionError);
}

TEST(Laurent, PrecisionPropagation) {
    const Fq& F = Fq::get(3);
    Laurent a = Laurent::from_coeffs(F, 2, {1, 2, 1}, 10);
    Laurent b = Laurent::from_coeffs(F, -1, {2, 1}, 4);
    Laurent p = a * b;
    EXPECT_EQ(p.valuation(), 1);
    EXPECT_EQ(p.precision(), std::min(2L + 4L, -1L + 10L));
    EXPECT_EQ((a + b).precision(), 4);
    // x^3 spreads the precision
    EXPECT_EQ(a.frobenius(1).precision(), 30);
    EXPECT_EQ(a.frobenius(1).valuation(), 6);
}

TEST(Laurent, ValuationAdditiveRandom) {
    std::mt19937_64 g(11);
    const Fq& F = Fq::get(4);
    for (int k = 0; k < 200; ++k) {
        Laurent a = rand_exact(F, g, static_cast<long>(g() % 7) - 3, 5);
        Laurent b = rand_exact(F, g, static_cast<long>(g() % 7) - 3, 5);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
    }
}

TEST(Laurent, TextForm) {
    const Fq& F = Fq::get(3);
    Laurent a = Laurent::from_coeffs(F, -1, {2, 0, 1}, 5);
    EXPECT_EQ(a.text(), "t^-1 * (2 + t^2) mod t^5");
}

TEST(Additive, ComposeSquareExample) {
    const Fq& F = Fq::get(2);
    AddSeries f = AddSeries::poly(F, {tpow(F, 1), Laurent::one(F)});
    AddSeries c = skew_compose(f, f);
    ASSERT_EQ(c.bound(), 2);
    EXPECT_TRUE(c.coeff(0).agrees(tpow(F, 2)));
    EXPECT_TRUE(c.coeff(1).agrees(tpow(F, 1) + tpow(F, 2)));
    EXPECT_TRUE(c.coeff(2).agrees(Laurent::one(F)));
    AddSeries id = AddSeries::identity(F);
    oracle::Dense g = oracle::dense_of(f);
    EXPECT_TRUE(oracle::dense_equal(oracle::dense_of(skew_compose(id, f)), g));
    EXPECT_TRUE(oracle::dense_equal(oracle::dense_of(skew_compose(f, id)), g));
}

TEST(Additive, ComposeMatchesSubstitutionRandom) {
    std::mt19937_64 g(5);
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        for (int k = 0; k < 20; ++k) {
            auto rnd = [&](int deg) {
                std::vector<Laurent> c;
                for (int i = 0; i <= deg; ++i) c.push_back(rand_exact(F, g, static_cast<long>(g() % 3) - 1, 3));
                return AddSeries::poly(F, c);
            };
            AddSeries a = rnd(1), b = rnd(q == 2 ? 2 : 1), c = rnd(1);
            auto lhs = skew_compose(skew_compose(a, b), c);
            auto rhs = skew_compose(a, skew_compose(b, c));
            EXPECT_TRUE(oracle::dense_equal(oracle::dense_of(lhs), oracle::dense_of(rhs)));
            auto sub = oracle::substitute(oracle::dense_of(a), oracle::dense_of(b));
            EXPECT_TRUE(oracle::dense_equal(oracle::dense_of(skew_compose(a, b)), sub));
        }
    }
}

TEST(Additive, InverseExample) {
    const Fq& F = Fq::get(2);
    AddSeries e = AddSeries::poly(F, {Laurent::one(F), tpow(F, 1)});
    AddSeries g = compositional_inverse(e, 4, 40);
    EXPECT_TRUE(g.coeff(0).agrees(Laurent::one(F)));
    EXPECT_TRUE(g.coeff(1).agrees(tpow(F, 1)));
    EXPECT_TRUE(g.coeff(2).agrees(tpow(F, 3)));
    AddSeries rt = skew_compose(e, g, 4, 40);
    EXPECT_TRUE(rt.coeff(0).agrees(Laurent::one(F)));
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(rt.coeff(i).is_zero()) << i;
    EXPECT_TRUE(compositional_inverse(AddSeries::identity(F), 3).coeff(1).is_zero());
}

TEST(Additive, InverseRoundTripRandom) {
    std::mt19937_64 g(17);
    for (int q : {2, 3, 4}) {
        const Fq& F = Fq::get(q);
        for (int k = 0; k < 10; ++k) {
            std::vector<Laurent> c{Laurent::one(F) + rand_exact(F, g, 1, 3)};
            for (int i = 1; i <= 3; ++i) c.push_back(rand_exact(F, g, 0, 3));
            AddSeries e = AddSeries::poly(F, c);
            const long P = 30;
            AddSeries inv = compositional_inverse(e, 4, P);
            AddSeries rt = skew_compose(e, inv, 4, P);
            EXPECT_TRUE(rt.coeff(0).agrees(Laurent::one(F)));
            for (int i = 1; i <= 4; ++i) EXPECT_TRUE(rt.coeff(i).is_zero());
        }
    }
    EXPECT_THROW(compositional_inverse(AddSeries::poly(Fq::get(2), {tpow(Fq::get(2), 1)}), 2), std::domain_error);
}

TEST(Newton, Examples) {
    const Fq& F = Fq::get(2);
    auto s1 = expand_slopes(newton_slopes({{1, tpow(F, 1)}, {2, Laurent::one(F)}}));
    EXPECT_EQ(s1, (std::vector<Q>{1}));
    auto s2 = expand_slopes(newton_slopes({{1, tpow(F, 1)}, {4, Laurent::one(F)}}));
    EXPECT_EQ(s2, (std::vector<Q>{Q(1, 3), Q(1, 3), Q(1, 3)}));
    auto s3 = expand_slopes(newton_slopes({{1, Laurent::one(F)}, {2, Laurent::one(F)}}));
    EXPECT_EQ(s3, (std::vector<Q>{0}));
}

TEST(Newton, ProductIsUnion) {
    std::mt19937_64 g(3);
    const Fq& F = Fq::get(3);
    for (int k = 0; k < 30; ++k) {
        auto rnd = [&]() {
            oracle::Dense d{&F, {Laurent::zero(F)}};
            int deg = 1 + static_cast<int>(g() % 3);
            for (int i = 1; i <= deg; ++i) d.c.push_back(rand_exact(F, g, static_cast<long>(g() % 5), 2));
            d.c[1] = Laurent::monomial(F, 1, static_cast<long>(g() % 4));
            d.c[deg] = Laurent::monomial(F, 2, static_cast<long>(g() % 4) - 2);
            return d;
        };
        auto terms = [](const oracle::Dense& d) {
            std::vector<std::pair<long, Laurent>> t;
            for (size_t i = 1; i < d.c.size(); ++i) t.emplace_back(static_cast<long>(i), d.c[i]);
            return t;
        };
        oracle::Dense a = rnd(), b = rnd();
        // a(z) * b(z) / z has nonzero roots = union
        oracle::Dense p = oracle::dmul(a, b);
        std::vector<std::pair<long, Laurent>> pt;
        for (size_t i = 2; i < p.c.size(); ++i) pt.emplace_back(static_cast<long>(i - 1), p.c[i]);
        auto sa = expand_slopes(newton_slopes(terms(a)));
        auto sb = expand_slopes(newton_slopes(terms(b)));
        sa.insert(sa.end(), sb.begin(), sb.end());
        std::sort(sa.begin(), sa.end());
        EXPECT_EQ(expand_slopes(newton_slopes(pt)), sa);
    }
}

TEST(Newton, UnresolvedVertexThrows) {
    const Fq& F = Fq::get(2);
    EXPECT_THROW(newton_slopes({{1, tpow(F, 4)}, {2, Laurent::zero(F, 1)}, {4, Laurent::one(F)}}), PrecisionError);
    EXPECT_NO_THROW(newton_slopes({{1, tpow(F, 4)}, {2, Laurent::zero(F, 5)}, {4, Laurent::one(F)}}));
}

TEST(RatFunc, InverseAndRank) {
    const Fq& F = Fq::get(2);
    RatFunc x = RatFunc::x_power(F, 1), one = RatFunc::one(F);
    RMatrix m{{one, x}, {RatFunc::zero(F), x}};
    RMatrix prod = rf_mul(m, rf_inverse(m));
    EXPECT_TRUE(prod[0][0] == one && prod[1][1] == one && prod[0][1].is_zero() && prod[1][0].is_zero());
    EXPECT_EQ(rf_rank(RMatrix{{one, x}, {x, x * x}}), 1);
    EXPECT_EQ(RatFunc::x_power(F, -3).valuation(), -3);
}
