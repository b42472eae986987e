#include "dtor/atlas.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "dtor/field.hpp"

namespace dtor {

long SlopeData::c(int i) const {
    if (i == m() + 1) return 1;
    return alpha.at(i).get_num().get_si();
}

long SlopeData::d(int i) const {
    if (i == m() + 1) return 0;
    return alpha.at(i).get_den().get_si();
}

SlopeData make_slopes(const QVec& alpha) {
    if (alpha.empty() || alpha[0] != 1) throw std::invalid_argument("slopes must start at 1");
    for (size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] <= alpha[i - 1]) throw std::invalid_argument("slopes must increase strictly");
    SlopeData sd;
    sd.alpha = alpha;
    for (auto& a : sd.alpha) a.canonicalize();
    return sd;
}

SlopeFan fan_from_slopes(const SlopeData& sd) {
    SlopeFan f;
    f.sd = sd;
    int m = sd.m();
    std::vector<ZVec> rays;
    for (int i = 0; i <= m + 1; ++i) rays.push_back({Z(sd.d(i)), Z(sd.c(i))});
    for (int i = 0; i <= m; ++i) f.sigma.push_back(Cone::from_rays(2, {rays[i], rays[i + 1]}));
    for (int i = 0; i <= m + 1; ++i) f.tau.push_back(Cone::from_rays(2, {rays[i]}));
    f.fan = Fan(2, f.sigma);
    return f;
}

bool smooth_by_determinant(const SlopeData& sd, int i) { return sd.c(i + 1) * sd.d(i) - sd.c(i) * sd.d(i + 1) == 1; }

std::string chart_monomial(const ZVec& b) {
    // (u0/u1)^{b1} (u0/u2)^{b2} = u0^{b1+b2} u1^{-b1} u2^{-b2}
    long e[3] = {Z(b[0] + b[1]).get_si(), -b[0].get_si(), -b[1].get_si()};
    std::string num, den;
    int nden = 0;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        std::string v = "u" + std::to_string(i);
        long p = e[i] > 0 ? e[i] : -e[i];
        if (p > 1) v += "^" + std::to_string(p);
        std::string& side = e[i] > 0 ? num : den;
        if (!side.empty()) side += "*";
        side += v;
        if (e[i] < 0) ++nden;
    }
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + (nden > 1 ? "(" + den + ")" : den);
}

ChartMonoid chart_monoid(const Cone& sigma) {
    ChartMonoid cm;
    cm.cone = sigma;
    cm.gens = hilbert_basis(sigma);
    for (const auto& g : cm.gens) cm.monomials.push_back(chart_monomial(g));
    return cm;
}

std::string Component::label() const {
    auto p = [](const P2& x) { return "(" + std::to_string(x[0]) + ":" + std::to_string(x[1]) + ":" + std::to_string(x[2]) + ")"; };
    switch (kind) {
        case Point: return "D(a=" + p(a) + ")";
        case Line: return "D(l=" + p(l) + ")";
        default: return "D(a=" + p(a) + ",l=" + p(l) + ",i=" + std::to_string(i) + ")";
    }
}

int Atlas::count(Component::Kind k) const {
    return static_cast<int>(std::count_if(components.begin(), components.end(), [&](const Component& c) { return c.kind == k; }));
}

int Atlas::edges_between(Component::Kind a, Component::Kind b) const {
    int n = 0;
    for (const auto& [x, y] : edges) {
        auto kx = components[x].kind, ky = components[y].kind;
        if ((kx == a && ky == b) || (kx == b && ky == a)) ++n;
    }
    return n;
}

std::vector<P2> p2_points(const Fq& F) {
    std::vector<P2> out;
    int q = F.q();
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) out.push_back({1, x, y});
    for (int y = 0; y < q; ++y) out.push_back({0, 1, y});
    out.push_back({0, 0, 1});
    std::sort(out.begin(), out.end());
    return out;
}

bool incident(const Fq& F, const P2& a, const P2& l) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(a[i], l[i]));
    return s == 0;
}

bool components_meet(const Fq& F, int m, const Component& x, const Component& y) {
    using K = Component::Kind;
    if (x.kind > y.kind) return components_meet(F, m, y, x);
    if (x.kind == K::Point && y.kind == K::Point) return false;
    if (x.kind == K::Line && y.kind == K::Line) return false;
    if (x.kind == K::Point && y.kind == K::Line) return m == 0 && incident(F, x.a, y.l);
    if (x.kind == K::Line && y.kind == K::Flag) return x.l == y.l && y.i == 1;
    if (x.kind == K::Flag && y.kind == K::Flag) return x.a == y.a && x.l == y.l && std::abs(x.i - y.i) == 1;
    // Point and Flag
    return x.a == y.a && y.i == m;
}

Atlas build_atlas(long q, const SlopeData& sd) {
    const Fq& F = Fq::get(static_cast<int>(q));
    Atlas at;
    at.q = q;
    at.sf = fan_from_slopes(sd);
    int m = sd.m();
    auto pts = p2_points(F);
    for (const auto& a : pts) at.components.push_back({Component::Point, a, {}, 0});
    for (const auto& l : pts) at.components.push_back({Component::Line, {}, l, 0});
    for (const auto& a : pts)
        for (const auto& l : pts)
            if (incident(F, a, l))
                for (int i = 1; i <= m; ++i) at.components.push_back({Component::Flag, a, l, i});
    int n = static_cast<int>(at.components.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (components_meet(F, m, at.components[i], at.components[j])) at.edges.emplace_back(i, j);
    for (const auto& s : at.sf.sigma) at.charts.push_back(chart_monoid(s));
    for (const auto& t : at.sf.tau) at.charts.push_back(chart_monoid(t));
    for (int i = 0; i <= m; ++i) at.smooth.push_back(smooth_by_determinant(sd, i));
    return at;
}

bool flag_chains_are_paths(const Atlas& at) {
    const Fq& F = Fq::get(static_cast<int>(at.q));
    int m = at.sf.sd.m();
    std::map<std::pair<int, int>, bool> adj;
    for (const auto& e : at.edges) adj[e] = adj[{e.second, e.first}] = true;
    auto find = [&](Component::Kind k, const P2& a, const P2& l, int i) {
        for (size_t j = 0; j < at.components.size(); ++j) {
            const auto& c = at.components[j];
            if (c.kind != k) continue;
            if (k == Component::Point && c.a == a) return static_cast<int>(j);
            if (k == Component::Line && c.l == l) return static_cast<int>(j);
            if (k == Component::Flag && c.a == a && c.l == l && c.i == i) return static_cast<int>(j);
        }
        return -1;
    };
    auto pts = p2_points(F);
    for (const auto& a : pts)
        for (const auto& l : pts) {
            if (!incident(F, a, l)) continue;
            std::vector<int> path{find(Component::Line, a, l, 0)};
            for (int i = 1; i <= m; ++i) path.push_back(find(Component::Flag, a, l, i));
            path.push_back(find(Component::Point, a, l, 0));
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (!adj[{path[i], path[i + 1]}]) return false;
            // no shortcuts along the chain
            for (size_t i = 0; i < path.size(); ++i)
                for (size_t j = i + 2; j < path.size(); ++j)
                    if (adj[{path[i], path[j]}]) return false;
        }
    return true;
}

namespace {

// sparse polynomial over F_q in a fixed number of variables
struct MPoly {
    const Fq* F;
    std::map<std::vector<int>, int> t;

    static MPoly var(const Fq& F, int n, int i) {
        MPoly p{&F, {}};
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.t[e] = 1;
        return p;
    }
    static MPoly constant(const Fq& F, int n, int c) {
        MPoly p{&F, {}};
        if (c) p.t[std::vector<int>(n, 0)] = c;
        return p;
    }
    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t) {
            int v = F->add(r.t.count(e) ? r.t[e] : 0, c);
            if (v)
                r.t[e] = v;
            else
                r.t.erase(e);
        }
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t) c = F->neg(c);
        return r;
    }
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const {
        MPoly r{F, {}};
        for (const auto& [e1, c1] : t)
            for (const auto& [e2, c2] : o.t) {
                std::vector<int> e(e1.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                MPoly m{F, {}};
                m.t[e] = F->mul(c1, c2);
                r = r + m;
            }
        return r;
    }
    bool is_zero() const { return t.empty(); }
    bool operator==(const MPoly& o) const { return t == o.t; }
    // coefficient of var^k as a polynomial in the others (var exponent zeroed)
    MPoly coeff_of(int var, int k) const {
        MPoly r{F, {}};
        for (const auto& [e, c] : t)
            if (e[var] == k) {
                auto f = e;
                f[var] = 0;
                r.t[f] = c;
            }
        return r;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : t) d = std::max(d, e[var]);
        return d;
    }
    // linear substitution of the variables in `vars`
    MPoly substitute(const std::vector<int>& vars, const std::vector<MPoly>& images) const {
        int n = static_cast<int>(t.empty() ? 0 : t.begin()->first.size());
        MPoly r{F, {}};
        for (const auto& [e, c] : t) {
            MPoly m = constant(*F, n, c);
            std::vector<int> rest = e;
            for (size_t k = 0; k < vars.size(); ++k) {
                rest[vars[k]] = 0;
                for (int p = 0; p < e[vars[k]]; ++p) m = m * images[k];
            }
            MPoly mono{F, {}};
            mono.t[rest] = 1;
            r = r + m * mono;
        }
        return r;
    }
    std::string str(const std::vector<std::string>& names) const {
        if (t.empty()) return "0";
        std::string out;
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            if (!out.empty()) out += "+";
            std::string mono;
            if (it->second != 1) mono = F->str(it->second);
            for (size_t i = 0; i < it->first.size(); ++i) {
                if (!it->first[i]) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            out += mono.empty() ? "1" : mono;
        }
        return out;
    }
};

struct RatM {
    MPoly num, den;
    RatM operator+(const RatM& o) const { return {num * o.den + o.num * den, den * o.den}; }
    RatM operator*(const RatM& o) const { return {num * o.num, den * o.den}; }
    bool equals(const RatM& o) const { return (num * o.den - o.num * den).is_zero(); }
};

}  // namespace

SatakeReport satake_chart_check() {
    const Fq& F = Fq::get(2);
    const int n = 5;  // T, u0, u1, u2, z
    enum { vT, vu0, vu1, vu2, vz };
    std::vector<std::string> names{"T", "u0", "u1", "u2", "z"};
    auto X = [&](int i) { return MPoly::var(F, n, i); };
    MPoly one = MPoly::constant(F, n, 1);
    SatakeReport rep;

    MPoly u0 = X(vu0), u1 = X(vu1), u2 = X(vu2), z = X(vz);
    RatM t1{u0, u1}, t2{u0, u2}, t3{u0, u1 + u2};
    RatM rel = t1 * t2 + t2 * t3 + t3 * t1;
    rep.relation = rel.num.is_zero();

    std::vector<MPoly> V;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                if (a || b || c) V.push_back(MPoly::constant(F, n, a) * u0 + MPoly::constant(F, n, b) * u1 + MPoly::constant(F, n, c) * u2);

    // T z prod (1 - u0 z / f)
    RatM prod{X(vT) * z, one};
    for (const auto& f : V) prod = prod * RatM{f - u0 * z, f};
    // T z (1 - z) prod_i (1 - t_i z)(1 - t_i/(1 + t_i) z)
    RatM alt{X(vT) * z * (one - z), one};
    for (const auto& f : {u1, u2, u1 + u2}) {
        alt = alt * RatM{f - u0 * z, f};
        alt = alt * RatM{f + u0 - u0 * z, f + u0};
    }
    rep.torsion_form = prod.equals(alt);

    rep.z_degree = prod.num.degree_in(vz);
    rep.additive = true;
    for (int k = 0; k <= rep.z_degree; ++k) {
        bool pw = k == 1 || k == 2 || k == 4 || k == 8;
        MPoly c = prod.num.coeff_of(vz, k);
        if (!pw && !c.is_zero()) rep.additive = false;
        if (pw) rep.coefficients.push_back("z^" + std::to_string(k) + ": (" + c.str(names) + ")/(" + prod.den.str(names) + ")");
    }

    // prod_{f != 0} (w - f), w carried by the z slot
    MPoly Qw = one;
    for (const auto& f : V) Qw = Qw * (z - f);
    rep.invariant = true;
    std::vector<MPoly> basis{u0, u1, u2};
    for (int code = 0; code < 512; ++code) {
        int g[3][3];
        for (int i = 0; i < 9; ++i) g[i / 3][i % 3] = (code >> i) & 1;
        int det = g[0][0] * (g[1][1] * g[2][2] + g[1][2] * g[2][1]) + g[0][1] * (g[1][0] * g[2][2] + g[1][2] * g[2][0]) +
                  g[0][2] * (g[1][0] * g[2][1] + g[1][1] * g[2][0]);
        if (det % 2 == 0) continue;
        ++rep.group_order;
        std::vector<MPoly> img;
        for (int i = 0; i < 3; ++i) {
            MPoly s = MPoly::constant(F, n, 0);
            for (int j = 0; j < 3; ++j)
                if (g[i][j]) s = s + basis[j];
            img.push_back(s);
        }
        if (!(Qw.substitute({vu0, vu1, vu2}, img) == Qw)) rep.invariant = false;
    }
    return rep;
}

}  // namespace dtor
