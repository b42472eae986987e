#include <gtest/gtest.h>

#include <set>

#include "dtor/atlas.hpp"
#include "oracles/monoid.hpp"

using namespace dtor;

namespace {

std::set<std::string> mono_set(const ChartMonoid& cm) { return {cm.monomials.begin(), cm.monomials.end()}; }

}  // namespace

TEST(SlopeFan, NoInteriorSlopesGivesFacesOfC3) {
    auto f = fan_from_slopes(make_slopes({1}));
    Cone c3 = Cone::from_ineqs(2, {{1, 0}, {-1, 1}});
    EXPECT_EQ(f.fan, Fan::faces_of(c3));
    EXPECT_EQ(f.sigma.size(), 1u);
    EXPECT_EQ(f.tau.size(), 2u);
}

TEST(SlopeFan, ThreeHalves) {
    auto sd = make_slopes({1, Q(3, 2)});
    auto f = fan_from_slopes(sd);
    EXPECT_EQ(f.tau.size(), 3u);
    EXPECT_EQ(f.fan.maximal().size(), 2u);
    EXPECT_TRUE(fan_validate(f.fan));
    EXPECT_EQ(sd.c(1), 3);
    EXPECT_EQ(sd.d(1), 2);
    EXPECT_TRUE(smooth_by_determinant(sd, 0));
    EXPECT_FALSE(smooth_by_determinant(sd, 1));
    for (int i = 0; i <= sd.m(); ++i) EXPECT_EQ(smooth_by_determinant(sd, i), f.sigma[i].is_regular());
    EXPECT_THROW(make_slopes({1, Q(1, 2)}), std::invalid_argument);
    EXPECT_THROW(make_slopes({2}), std::invalid_argument);
}

TEST(SlopeFan, DeterminantRuleMatchesRegularity) {
    std::vector<QVec> all = {{1, 2}, {1, Q(3, 2), 2}, {1, Q(5, 3), Q(7, 2), 4}, {1, Q(4, 3), Q(3, 2), Q(5, 3), 2, 3}};
    for (const auto& a : all) {
        auto sd = make_slopes(a);
        auto f = fan_from_slopes(sd);
        for (int i = 0; i <= sd.m(); ++i) EXPECT_EQ(smooth_by_determinant(sd, i), f.sigma[i].is_regular());
    }
}

TEST(ChartMonoid, BoundaryRaysAndCones) {
    auto f = fan_from_slopes(make_slopes({1}));
    // tau_0: u0/u1 and (u1/u2)^{+-1}, up to a change of generators of one monoid
    auto t0 = chart_monoid(f.tau[0]);
    auto want0 = std::vector<ZVec>{{1, 0}, {1, -1}, {-1, 1}};
    EXPECT_TRUE(oracle::same_monoid(t0.gens, want0));
    auto tm = chart_monoid(f.tau[1]);
    // u1/u2 = (u0/u1)^{-1}(u0/u2) and (u0/u1)^{+-1}
    EXPECT_TRUE(oracle::same_monoid(tm.gens, {{-1, 1}, {1, 0}, {-1, 0}}));
    auto s0 = chart_monoid(f.sigma[0]);
    EXPECT_EQ(mono_set(s0), (std::set<std::string>{"u0/u1", "u1/u2"}));
    EXPECT_EQ(chart_monomial({1, 1}), "u0^2/(u1*u2)");
}

TEST(ChartMonoid, InteriorConeHilbertBasis) {
    auto f = fan_from_slopes(make_slopes({1, 2, Q(7, 2)}));
    for (const auto& s : f.sigma) {
        auto cm = chart_monoid(s);
        EXPECT_TRUE(oracle::generates_dual_points(s, cm.gens, 10));
        EXPECT_TRUE(oracle::is_minimal(cm.gens));
    }
}

TEST(Atlas, NoInteriorSlopes) {
    auto at = build_atlas(2, make_slopes({1}));
    EXPECT_EQ(at.count(Component::Point), 7);
    EXPECT_EQ(at.count(Component::Line), 7);
    EXPECT_EQ(at.count(Component::Flag), 0);
    EXPECT_EQ(at.edges_between(Component::Point, Component::Line), 21);
    EXPECT_EQ(at.edges.size(), 21u);
    EXPECT_TRUE(flag_chains_are_paths(at));
}

TEST(Atlas, OneInteriorSlope) {
    auto at = build_atlas(2, make_slopes({1, Q(3, 2)}));
    EXPECT_EQ(at.count(Component::Flag), 21);
    EXPECT_EQ(at.edges_between(Component::Point, Component::Line), 0);
    EXPECT_EQ(at.edges_between(Component::Point, Component::Point), 0);
    EXPECT_EQ(at.edges_between(Component::Line, Component::Line), 0);
    // each flag meets its line and its point
    EXPECT_EQ(at.edges_between(Component::Line, Component::Flag), 21);
    EXPECT_EQ(at.edges_between(Component::Point, Component::Flag), 21);
    EXPECT_TRUE(flag_chains_are_paths(at));
    EXPECT_TRUE(at.smooth[0]);
}

TEST(Atlas, CountsForLargerData) {
    for (long q : {2, 3, 4}) {
        auto at = build_atlas(q, make_slopes({1, 2, 3}));
        long p = q * q + q + 1;
        EXPECT_EQ(at.count(Component::Point), p);
        EXPECT_EQ(at.count(Component::Line), p);
        EXPECT_EQ(at.count(Component::Flag), p * (q + 1) * 2);
        EXPECT_TRUE(flag_chains_are_paths(at));
        // flag-flag edges: one per flag between i = 1 and i = 2
        EXPECT_EQ(at.edges_between(Component::Flag, Component::Flag), p * (q + 1));
    }
}

TEST(Satake, ChartRelationAndTorsionProduct) {
    auto r = satake_chart_check();
    EXPECT_TRUE(r.relation);
    EXPECT_TRUE(r.torsion_form);
    EXPECT_EQ(r.z_degree, 8);
    EXPECT_TRUE(r.additive);
    EXPECT_TRUE(r.invariant);
    EXPECT_EQ(r.group_order, 168);
    EXPECT_EQ(r.coefficients.size(), 4u);
}
