#include <gtest/gtest.h>

#include <random>

#include "dtor/cone.hpp"
#include "dtor/fan.hpp"
#include "oracles/monoid.hpp"

using namespace dtor;

namespace {

ZVec z(std::initializer_list<long> l) {
    ZVec v;
    for (long x : l) v.push_back(Z(x));
    return v;
}

std::vector<ZVec> sorted(std::vector<ZVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Cone random_cone(std::mt19937_64& g, int n, int k) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<ZVec> rays;
    for (int i = 0; i < k; ++i) {
        ZVec r(n);
        for (auto& x : r) x = d(g);
        rays.push_back(r);
    }
    return Cone::from_rays(n, rays);
}

// rays in the closed orthant, so the cone is pointed
Cone random_pointed(std::mt19937_64& g, int n, int k) {
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<ZVec> rays;
    for (int i = 0; i < k; ++i) {
        ZVec r(n);
        for (auto& x : r) x = d(g);
        r[i % n] += 1;
        rays.push_back(r);
    }
    return Cone::from_rays(n, rays);
}

}  // namespace

TEST(Cone, ChamberDual) {
    Cone c2 = Cone::from_ineqs(2, {z({1, 0}), z({-1, 1})});
    EXPECT_EQ(c2.rays(), sorted({z({0, 1}), z({1, 1})}));
    Cone d = c2.dual();
    EXPECT_EQ(d, Cone::from_rays(2, {z({1, 0}), z({-1, 1})}));
    EXPECT_EQ(d.dual(), c2);
}

TEST(Cone, OrthantSelfDual) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(Cone::orthant(n).dual(), Cone::orthant(n));
}

TEST(Cone, RayDualIsHalfPlane) {
    Cone r = Cone::from_rays(2, {z({1, 2})});
    Cone d = r.dual();
    EXPECT_EQ(d.lineality_dim(), 1);
    EXPECT_EQ(d.dim(), 2);
    EXPECT_TRUE(d.contains(z({2, -1})));
    EXPECT_TRUE(d.contains(z({-2, 1})));
    EXPECT_FALSE(d.contains(z({-1, 0})));
    EXPECT_EQ(d, Cone::from_ineqs(2, {z({1, 2})}));
}

TEST(Cone, HilbertExamples) {
    EXPECT_EQ(sorted(hilbert_basis(Cone::orthant(2))), sorted({z({1, 0}), z({0, 1})}));
    Cone c2 = Cone::from_ineqs(2, {z({1, 0}), z({-1, 1})});
    EXPECT_EQ(sorted(hilbert_basis(c2)), sorted({z({1, 0}), z({-1, 1})}));
    EXPECT_EQ(sorted(hilbert_basis(Cone::from_rays(2, {z({1, 2})}))), sorted({z({1, 0}), z({2, -1}), z({-2, 1})}));
    // the classic non-regular cone (1,0),(1,2)
    EXPECT_EQ(sorted(lattice_generators(Cone::from_rays(2, {z({1, 0}), z({1, 2})}))),
              sorted({z({1, 0}), z({1, 1}), z({1, 2})}));
}

TEST(Cone, RoundTripRandom) {
    std::mt19937_64 g(11);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 3;
        Cone c = random_cone(g, n, 1 + t % 5);
        Cone h = Cone::from_ineqs(n, c.facets(), c.equations());
        EXPECT_EQ(c, h) << c.str();
        EXPECT_EQ(c.dual().dual(), c);
        for (const auto& r : c.rays()) EXPECT_TRUE(c.contains(r));
        EXPECT_TRUE(c.interior_contains(c.interior_point()));
    }
}

TEST(Cone, IntersectionAgainstMembership) {
    std::mt19937_64 g(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 30; ++t) {
        Cone a = random_cone(g, 3, 3), b = random_cone(g, 3, 3);
        Cone x = a.intersect(b);
        for (int s = 0; s < 50; ++s) {
            ZVec p = z({d(g), d(g), d(g)});
            EXPECT_EQ(x.contains(p), a.contains(p) && b.contains(p));
        }
    }
}

TEST(Cone, FacesOfOrthant) {
    auto f = Cone::orthant(3).faces();
    EXPECT_EQ(f.size(), 8u);
    int edges = 0;
    for (const auto& c : f) edges += c.dim() == 1;
    EXPECT_EQ(edges, 3);
    EXPECT_TRUE(Cone::orthant(2).is_face_of(Cone::orthant(2)));
}

TEST(Cone, Regularity) {
    EXPECT_TRUE(Cone::from_rays(2, {z({1, 0}), z({1, 1})}).is_regular());
    EXPECT_FALSE(Cone::from_rays(2, {z({1, 0}), z({1, 2})}).is_regular());
    EXPECT_TRUE(Cone::from_rays(3, {z({1, 2, 0}), z({0, 1, 0})}).is_regular());
    EXPECT_FALSE(Cone::from_rays(3, {z({1, 0, 0}), z({0, 1, 0}), z({1, 1, 2})}).is_regular());
}

TEST(Cone, HilbertBasisOracle) {
    std::mt19937_64 g(3);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + t % 2;
        Cone c = random_pointed(g, n, n + t % 2);
        auto hb = lattice_generators(c);
        for (const auto& h : hb) EXPECT_TRUE(c.contains(h));
        std::map<ZVec, bool> memo;
        auto pts = oracle::box_points(c, n == 2 ? 6 : 4);
        for (const auto& p : pts) EXPECT_TRUE(oracle::in_monoid(c, hb, p, memo)) << c.str();
        // no generator splits as a sum of two nonzero monoid elements
        for (const auto& h : hb)
            for (const auto& p : pts) {
                bool zero = true;
                for (const auto& v : p) zero = zero && v == 0;
                if (zero || p == h) continue;
                ZVec r = h;
                for (size_t i = 0; i < r.size(); ++i) r[i] -= p[i];
                bool rzero = true;
                for (const auto& v : r) rzero = rzero && v == 0;
                EXPECT_FALSE(!rzero && c.contains(r)) << "reducible " << h[0];
            }
    }
}

TEST(Cone, TriangulationVolume) {
    Cone sq = Cone::from_rays(3, {z({1, 0, 1}), z({0, 1, 1}), z({-1, 0, 1}), z({0, -1, 1})});
    auto tri = triangulate(sq, sq.rays());
    EXPECT_EQ(tri.size(), 2u);
    QVec f = {0, 0, 1};
    Q v = truncated_volume(sq, f);
    Q sum = 0;
    for (const auto& s : tri) sum += truncated_volume(Cone::from_rays(3, s), f);
    EXPECT_EQ(v, sum);
    EXPECT_EQ(v, Q(2) / 3);
}

TEST(Fan, RefineInsertsMiddleRay) {
    Fan f = Fan::faces_of(Cone::from_rays(2, {z({1, 0}), z({1, 2})}));
    Fan r = regular_refine(f);
    EXPECT_TRUE(fan_validate(r));
    EXPECT_TRUE(is_subdivision(r, f));
    EXPECT_TRUE(r.contains(Cone::from_rays(2, {z({1, 1})})));
    for (const auto& c : r.cones()) EXPECT_TRUE(c.is_regular());
    EXPECT_EQ(r.maximal().size(), 2u);
}

TEST(Fan, RefineRandom3d) {
    std::mt19937_64 g(17);
    for (int t = 0; t < 8; ++t) {
        Fan f = Fan::faces_of(random_pointed(g, 3, 3 + t % 2));
        Fan r = regular_refine(f);
        EXPECT_TRUE(fan_validate(r));
        EXPECT_TRUE(is_subdivision(r, f));
        EXPECT_FALSE(is_subdivision(f, r) && f.size() != r.size());
        for (const auto& c : r.cones()) EXPECT_TRUE(c.is_regular()) << c.str();
    }
}

TEST(Fan, ValidateAndJoin) {
    Cone a = Cone::from_rays(2, {z({1, 0}), z({1, 2})});
    Cone b = Cone::from_rays(2, {z({1, 1}), z({0, 1})});
    std::string why;
    EXPECT_FALSE(fan_validate(Fan(2, {a, b}), &why));
    EXPECT_FALSE(why.empty());
    Fan fa = Fan::faces_of(Cone::orthant(2));
    Fan fb(2, {Cone::from_rays(2, {z({1, 0}), z({1, 1})}), Cone::from_rays(2, {z({1, 1}), z({-1, 1})})});
    Fan j = join(fa, fb);
    EXPECT_TRUE(fan_validate(j));
    EXPECT_EQ(j.maximal().size(), 2u);
    EXPECT_TRUE(is_subdivision(j, fa));
    EXPECT_FALSE(is_subdivision(fa, j));
}
