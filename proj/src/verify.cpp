#include "dtor/verify.hpp"

#include "dtor/epsilon.hpp"
#include "dtor/rng.hpp"
#include "dtor/xi.hpp"

namespace dtor {

namespace {

long ipow(long q, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

std::string steps_id(const std::vector<LatticeStep>& st) {
    std::string s;
    for (const auto& x : st) {
        if (!s.empty()) s += ",";
        s += std::to_string(x.m);
        if (x.unit.has_field() && !x.unit.is_zero()) s += "*(" + x.unit.str("t") + ")";
    }
    return s;
}

}  // namespace

std::vector<ReportRow> verify_tate(long P) {
    std::vector<ReportRow> rows;
    struct Case {
        long q;
        std::vector<long> ms;
    };
    std::vector<Case> cases = {{2, {1}}, {2, {2}}, {3, {1}}, {2, {1, 3}}, {2, {1, 4}}, {2, {2, 5}}, {3, {1, 2}}};
    for (const auto& c : cases) {
        const Fq& F = Fq::get(static_cast<int>(c.q));
        auto base = module_from_strings(F, {"t", "1"}, 1);
        std::vector<LatticeStep> st;
        for (long m : c.ms) st.push_back({m, Poly()});
        std::string id = "q=" + std::to_string(c.q) + " m=" + steps_id(st);
        Tower tw;
        try {
            tw = iterate_quotient(base, st, P);
        } catch (const std::exception& e) {
            rows.push_back({"tate", id, "tower", e.what(), false});
            continue;
        }
        const auto& phi = tw.top();
        int d = phi.d;
        long qd = ipow(c.q, d);
        auto terms = phi.phi_T.z_terms();
        long zdeg = terms.empty() ? 0 : terms.back().first;
        rows.push_back({"tate.zdeg", id, std::to_string(qd), std::to_string(zdeg), zdeg == qd});
        Q got(phi.coeff(d).valuation());
        Q want = Q(qd - 1) * delta_oracle(c.q, 1, tw.s);
        rows.push_back({"tate.lead", id, to_string(want), to_string(got), got == want});
        if (tw.s.size() > 1) {
            // delta of the pair equals the two one-step pieces
            Q split = delta(c.q, 1, {tw.s[0]}) + delta(c.q, 2, {eps_hat(c.q, 1, {tw.s[0]}, tw.s[1])});
            rows.push_back({"tate.delta_split", id, to_string(want / Q(qd - 1)), to_string(split), split * Q(qd - 1) == want});
            rows.push_back({"tate.e_inverse", id, std::to_string(c.ms[1]), to_string(eps_oracle(c.q, 1, {tw.s[0]}, tw.s[1])),
                            eps_oracle(c.q, 1, {tw.s[0]}, tw.s[1]) == Q(c.ms[1])});
        }
    }
    return rows;
}

std::string TorsionInstance::id() const {
    std::string b;
    for (const auto& x : base) b += (b.empty() ? "" : ",") + x;
    return "q=" + std::to_string(q) + " base=" + b + " m=" + steps_id(steps) + " N=" + N;
}

std::vector<TorsionInstance> torsion_instances(int extra, std::uint64_t seed) {
    using S = std::vector<std::string>;
    auto st = [](std::vector<long> ms) {
        std::vector<LatticeStep> v;
        for (long m : ms) v.push_back({m, Poly()});
        return v;
    };
    std::vector<TorsionInstance> out = {
        {2, S{"t", "1"}, st({1}), "T"},          {2, S{"t", "1"}, st({2}), "T"},
        {2, S{"t", "1"}, st({3}), "T"},          {2, S{"t", "1"}, st({1, 3}), "T"},
        {2, S{"t", "1"}, st({1, 4}), "T"},       {2, S{"t", "1"}, st({2, 5}), "T"},
        {3, S{"t", "1"}, st({1}), "T"},          {2, S{"t", "1"}, st({2}), "T^2+T+1"},
        {2, S{"t", "1"}, st({1, 3}), "T^2"},     {3, S{"t", "1"}, st({1, 2}), "T"},
        {2, S{"t", "1", "1"}, st({1}), "T"},     {2, S{"t", "1", "1"}, st({2}), "T^2"},
        {3, S{"t", "1"}, st({2}), "T^2"},
    };
    Rng g(seed, "torsion_instances");
    for (int i = 0; i < extra; ++i) {
        TorsionInstance c;
        c.q = g.uniform(0, 2) == 0 ? 3 : 2;
        const Fq& F = Fq::get(static_cast<int>(c.q));
        c.base = {"t", "1"};
        int n = static_cast<int>(g.uniform(1, 2));
        long m = g.uniform(1, c.q == 2 ? 2 : 1);
        for (int j = 0; j < n; ++j) {
            std::vector<int> u = {static_cast<int>(g.uniform(1, c.q - 1))};
            for (int e = 0; e < 2; ++e) u.push_back(static_cast<int>(g.uniform(0, c.q - 1)));
            c.steps.push_back({m, Poly(F, u)});
            m = m * c.q + g.uniform(1, 2);
        }
        c.N = g.uniform(0, 1) == 0 ? "T" : "T+1";
        out.push_back(c);
    }
    return out;
}

std::vector<ReportRow> verify_sigk3(const std::vector<TorsionInstance>& cases, long P) {
    std::vector<ReportRow> rows;
    for (const auto& c : cases) {
        std::string id = c.id();
        const Fq& F = Fq::get(static_cast<int>(c.q));
        try {
            auto base = module_from_strings(F, c.base, static_cast<int>(c.base.size()) - 1);
            auto tw = iterate_quotient(base, c.steps, P);
            Poly N = Poly::parse(F, c.N);
            int k = N.degree();
            auto a = class_point_N(tw, k);
            auto b = class_point_N_newton(tw, N);
            rows.push_back({"sigk3.newton", id, join(b.powers), join(a.powers), a.powers == b.powers});
            auto cp = class_point(tw);
            QVec src = cp.full_powers();
            QVec img;
            bool ok = a.plain(img);
            int d = tw.top().d;
            if (!ok || static_cast<int>(img.size()) != d - 1) {
                rows.push_back({"sigk3.membership", id, "plain c(phi,N)", join(a.powers), false});
                continue;
            }
            auto sf = sigma_upper(c.q, d, k);
            int bad = 0, hits = 0;
            for (size_t i = 0; i < sf.fan.cones().size(); ++i) {
                bool in_src = sf.contains_powers(i, src);
                bool in_img = xi_image(c.q, k, sf.fan.cones()[i]).contains(img);
                if (in_src != in_img) ++bad;
                if (in_src) ++hits;
            }
            rows.push_back({"sigk3.membership", id, "0 mismatches", std::to_string(bad) + " mismatches over " +
                                std::to_string(sf.fan.cones().size()) + " cones (" + std::to_string(hits) + " containing)",
                            bad == 0 && hits > 0});
        } catch (const std::exception& e) {
            rows.push_back({"sigk3", id, "run", e.what(), false});
        }
    }
    return rows;
}

}  // namespace dtor
