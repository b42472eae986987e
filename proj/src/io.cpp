#include "dtor/io.hpp"

#include <stdexcept>

namespace dtor {

json zvecs_json(const std::vector<ZVec>& v) {
    json a = json::array();
    for (const auto& x : v) {
        json r = json::array();
        for (const auto& e : x) r.push_back(e.get_si());
        a.push_back(r);
    }
    return a;
}

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json qmat_json(const QMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(qvec_json(r));
    return a;
}

json cone_json(const Cone& c) {
    return json{{"dim", c.dim()},
                {"ambient", c.ambient()},
                {"rays", zvecs_json(c.rays())},
                {"lineality", zvecs_json(c.lineality())},
                {"ineqs", zvecs_json(c.facets())},
                {"eqs", zvecs_json(c.equations())}};
}

json fan_json(const Fan& f) {
    json cones = json::array();
    for (const auto& c : f.cones()) cones.push_back(cone_json(c));
    json maxi = json::array();
    for (const auto& c : f.maximal()) maxi.push_back(cone_json(c));
    return json{{"ambient", f.ambient()}, {"cones", cones}, {"maximal", maxi}};
}

json image_fan_json(const ImageFan& f, bool with_maps, std::uint64_t seed) {
    json j = fan_json(f.fan);
    j["q"] = f.q;
    j["d"] = f.d;
    j["k"] = f.k;
    j["kp"] = f.kp;
    json pieces = json::array();
    for (size_t i = 0; i < f.source.size(); ++i) {
        json p{{"source", cone_json(f.source[i])}, {"image", cone_json(f.image[i])}};
        if (with_maps) {
            if (f.k <= f.kp) {
                auto lin = f.k == f.kp ? linearize_xi(f.q, f.k, f.k, f.source[i], seed)
                                       : linearize_transfer(f.q, f.k, f.kp, f.source[i], seed);
                p["map"] = qmat_json(lin.l);
                p["certified"] = lin.certified;
            }
        }
        pieces.push_back(p);
    }
    j["pieces"] = pieces;
    return j;
}

namespace {

std::vector<ZVec> zvecs_from(const json& j, int n) {
    std::vector<ZVec> out;
    for (const auto& r : j) {
        if (!r.is_array() || static_cast<int>(r.size()) != n) throw std::invalid_argument("vector of wrong length");
        ZVec v;
        for (const auto& e : r) v.push_back(Z(e.get<long>()));
        out.push_back(v);
    }
    return out;
}

}  // namespace

Cone cone_from_json(const json& j) {
    int n = j.at("ambient").get<int>();
    return Cone::from_rays(n, zvecs_from(j.at("rays"), n), zvecs_from(j.value("lineality", json::array()), n));
}

Fan fan_from_json(const json& j) {
    int n = j.at("ambient").get<int>();
    const json& cs = j.contains("maximal") ? j["maximal"] : j.at("cones");
    std::vector<Cone> cones;
    for (const auto& c : cs) cones.push_back(cone_from_json(c));
    return Fan(n, cones);
}

json laurent_json(const Laurent& x) {
    json c = json::array();
    for (int v : x.window()) c.push_back(v);
    json j{{"valuation", x.is_zero() ? json(nullptr) : json(x.valuation())}, {"coeffs", c}};
    j["precision"] = x.is_exact() ? json("exact") : json(x.precision());
    return j;
}

namespace {

// polynomial text when x is an exact polynomial in t, else the truncated series
json coeff_json(const Laurent& x) {
    if (x.is_zero() && x.is_exact()) return "0";
    if (x.is_exact() && x.valuation() >= 0) {
        std::vector<int> c(static_cast<size_t>(x.valuation()), 0);
        c.insert(c.end(), x.window().begin(), x.window().end());
        return Poly(x.field(), c).str("t");
    }
    return laurent_json(x);
}

}  // namespace

json module_json(const DrinfeldModule& phi) {
    json c = json::array();
    for (const auto& x : phi.phi_T.terms()) c.push_back(coeff_json(x));
    return json{{"q", phi.q()}, {"d", phi.d}, {"r", reduction_rank(phi)}, {"gamma_T", coeff_json(phi.gamma_T())}, {"phi_T", c}};
}

namespace {

DrinfeldModule module_from_json(const Fq& F, const json& j) {
    if (!j.contains("phi_T") || !j["phi_T"].is_array()) throw std::invalid_argument("module descriptor needs phi_T");
    std::vector<std::string> cs;
    for (const auto& x : j["phi_T"]) cs.push_back(x.get<std::string>());
    int d = j.contains("d") ? j["d"].get<int>() : static_cast<int>(cs.size()) - 1;
    auto phi = module_from_strings(F, cs, d);
    if (j.contains("gamma_T")) {
        Laurent g = Laurent::from_poly(Poly::parse(F, j["gamma_T"].get<std::string>()));
        if (!g.agrees(phi.gamma_T())) throw std::invalid_argument("gamma_T differs from the tau^0 coefficient of phi_T");
    }
    if (j.contains("r") && j["r"].get<int>() != reduction_rank(phi))
        throw std::invalid_argument("declared r differs from the reduction rank");
    return phi;
}

}  // namespace

ModuleSpec parse_module_spec(const json& j) {
    ModuleSpec s;
    s.q = j.value("q", 2L);
    if (!Fq::is_prime_power(static_cast<int>(s.q))) throw std::invalid_argument("q is not a prime power");
    const Fq& F = Fq::get(static_cast<int>(s.q));
    if (j.contains("base")) {
        s.base = module_from_json(F, j["base"]);
        for (const auto& st : j.value("lattice_steps", json::array())) {
            LatticeStep ls;
            ls.m = st.at("m").get<long>();
            if (st.contains("unit")) ls.unit = Poly::parse(F, st["unit"].get<std::string>());
            s.steps.push_back(ls);
        }
    } else {
        s.base = module_from_json(F, j);
    }
    return s;
}

json atlas_json(const Atlas& at) {
    json comps = json::array();
    auto p2 = [](const P2& x) { return json::array({x[0], x[1], x[2]}); };
    for (const auto& c : at.components) {
        json e{{"label", c.label()}};
        switch (c.kind) {
            case Component::Point:
                e["kind"] = "D(a)";
                e["a"] = p2(c.a);
                break;
            case Component::Line:
                e["kind"] = "D(l)";
                e["l"] = p2(c.l);
                break;
            default:
                e["kind"] = "D(a,l,i)";
                e["a"] = p2(c.a);
                e["l"] = p2(c.l);
                e["i"] = c.i;
        }
        comps.push_back(e);
    }
    json edges = json::array();
    for (const auto& [a, b] : at.edges) edges.push_back(json::array({a, b}));
    json charts = json::array();
    int m = at.sf.sd.m();
    for (size_t i = 0; i < at.charts.size(); ++i) {
        const auto& ch = at.charts[i];
        std::string name = static_cast<int>(i) <= m ? "sigma_" + std::to_string(i) : "tau_" + std::to_string(i - m - 1);
        charts.push_back({{"name", name},
                          {"cone", cone_json(ch.cone)},
                          {"monoid_gens", zvecs_json(ch.gens)},
                          {"monomials", ch.monomials}});
    }
    json smooth = json::array();
    for (size_t i = 0; i < at.smooth.size(); ++i)
        smooth.push_back({{"cone", "sigma_" + std::to_string(i)},
                          {"smooth", static_cast<bool>(at.smooth[i])},
                          {"regular", at.sf.sigma[i].is_regular()}});
    json slopes = json::array();
    for (const auto& a : at.sf.sd.alpha) slopes.push_back(to_string(a));
    return json{{"q", at.q}, {"slopes", slopes}, {"components", comps}, {"edges", edges}, {"charts", charts}, {"smooth", smooth}};
}

std::string atlas_dot(const Atlas& at) {
    std::string out = "graph atlas {\n";
    for (size_t i = 0; i < at.components.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + at.components[i].label() + "\"];\n";
    for (const auto& [a, b] : at.edges) out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dtor
