#pragma once

#include <array>
#include <string>
#include <vector>

#include "dtor/fan.hpp"
#include "dtor/field.hpp"

namespace dtor {

// 1 = alpha_0 < alpha_1 < ... < alpha_m
struct SlopeData {
    QVec alpha;
    int m() const { return static_cast<int>(alpha.size()) - 1; }
    // alpha_i = c_i / d_i in lowest terms; i = m+1 gives (1, 0)
    long c(int i) const;
    long d(int i) const;
};

SlopeData make_slopes(const QVec& alpha);  // validates

struct SlopeFan {
    SlopeData sd;
    std::vector<Cone> sigma;  // sigma_0..sigma_m
    std::vector<Cone> tau;    // tau_0..tau_{m+1}
    Fan fan;
};
SlopeFan fan_from_slopes(const SlopeData& sd);

// c_{i+1} d_i - c_i d_{i+1} = 1
bool smooth_by_determinant(const SlopeData& sd, int i);

// monomials (u0/u1)^{b1} (u0/u2)^{b2}
struct ChartMonoid {
    Cone cone;
    std::vector<ZVec> gens;
    std::vector<std::string> monomials;
};
ChartMonoid chart_monoid(const Cone& sigma);
std::string chart_monomial(const ZVec& b);

using P2 = std::array<int, 3>;  // first nonzero coordinate is 1

struct Component {
    enum Kind { Point, Line, Flag } kind = Point;
    P2 a{};
    P2 l{};
    int i = 0;
    std::string label() const;
};

struct Atlas {
    long q = 2;
    SlopeFan sf;
    std::vector<Component> components;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    std::vector<ChartMonoid> charts;         // sigma_0..sigma_m then tau_0..tau_{m+1}
    std::vector<bool> smooth;                // per sigma_i
    int count(Component::Kind k) const;
    int edges_between(Component::Kind a, Component::Kind b) const;
};

std::vector<P2> p2_points(const Fq& F);
bool incident(const Fq& F, const P2& a, const P2& l);
bool components_meet(const Fq& F, int m, const Component& x, const Component& y);
Atlas build_atlas(long q, const SlopeData& sd);

// the D(l) - D(a,l,1) - ... - D(a,l,m) - D(a) chain is a path in the graph
bool flag_chains_are_paths(const Atlas& at);

struct SatakeReport {
    bool relation = false;          // t1 t2 + t2 t3 + t3 t1 = 0 in F_2(u0, u1, u2)
    bool torsion_form = false;      // both product forms of phi(T) agree
    int z_degree = 0;
    bool additive = false;          // only z^{2^i} survive
    bool invariant = false;         // prod_{f != 0} (w - f) fixed by GL_3(F_2)
    int group_order = 0;
    std::vector<std::string> coefficients;  // the z^{2^i} coefficients
};
SatakeReport satake_chart_check();

}  // namespace dtor
