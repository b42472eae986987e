#include "dtor/identities.hpp"

#include <algorithm>
#include <numeric>

#include "dtor/bruhat_tits.hpp"
#include "dtor/epsilon.hpp"
#include "dtor/rng.hpp"

namespace dtor {

namespace {

QVec sorted_s(Rng& g, int n) {
    QVec s;
    for (int i = 0; i < n; ++i) s.push_back(g.positive_rational(16, 4));
    std::sort(s.begin(), s.end());
    return s;
}

std::string case_id(long q, int r, const QVec& s, const Q& x) {
    return "q=" + std::to_string(q) + " r=" + std::to_string(r) + " s=(" + join(s) + ") x=" + to_string(x);
}

ReportRow row(const std::string& suite, const std::string& id, const Q& want, const Q& got) {
    return {suite, id, to_string(want), to_string(got), want == got};
}

QVec slice(const QVec& s, size_t a, size_t b) { return QVec(s.begin() + a, s.begin() + b); }

// a face of a translated, permuted standard simplex of AP_n
Simplex random_simplex(Rng& g, int n) {
    Simplex base = standard_simplex(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[g.uniform(0, i)]);
    std::vector<long> shift(n);
    for (auto& v : shift) v = g.uniform(-1, 2);
    Simplex out;
    for (const auto& L : base) {
        if (out.empty() || g.uniform(0, 2) > 0) {
            std::vector<long> a(n);
            for (int i = 0; i < n; ++i) a[perm[i]] = L.exponents()[i] + shift[perm[i]];
            out.push_back(Lattice::diagonal(a));
        }
    }
    return out;
}

QVec combo(const Cone& c, Rng& g) {
    QVec p(c.ambient(), 0);
    for (const auto& ray : c.rays()) {
        Q w = g.positive_rational(8, 3);
        for (int i = 0; i < c.ambient(); ++i) p[i] += w * Q(ray[i]);
    }
    return p;
}

}  // namespace

std::vector<ReportRow> verify_identities(long q, int trials, std::uint64_t seed) {
    std::vector<ReportRow> out;

    Rng g1(seed, "scaling");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g1.uniform(1, 3)), n = static_cast<int>(g1.uniform(1, 3));
        QVec s = sorted_s(g1, n);
        Q x = s.back() + g1.positive_rational(32, 4) - Q(1, 4);
        Q lhs = eps_hat_oracle(q, r, s, x);
        Q rhs = qpow_int(q, r + n) * eps_hat_oracle(q, r, s, x / qpow_int(q, r));
        out.push_back(row("scaling", case_id(q, r, s, x), lhs, rhs));
    }

    Rng g2(seed, "composition");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g2.uniform(1, 3)), n = static_cast<int>(g2.uniform(1, 2)),
            m = static_cast<int>(g2.uniform(0, 2));
        QVec s = sorted_s(g2, n + m);
        Q x = g2.positive_rational(64, 4);
        QVec tt = slice(s, 0, m), sp;
        for (int i = 0; i < n; ++i) sp.push_back(eps_hat_oracle(q, r, tt, s[m + i]));
        Q lhs = eps_hat_oracle(q, r, s, x);
        Q rhs = eps_hat_oracle(q, r + m, sp, eps_hat_oracle(q, r, tt, x));
        out.push_back(row("composition", case_id(q, r, s, x) + " m=" + std::to_string(m), lhs, rhs));
    }

    Rng g3(seed, "hat_composition");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g3.uniform(1, 3)), n = static_cast<int>(g3.uniform(1, 3));
        QVec s = sorted_s(g3, n);
        Q x = g3.positive_rational(64, 4);
        Q y = x;
        for (int i = 0; i < n; ++i) {
            Q si = eps_hat_oracle(q, r, slice(s, 0, i), s[i]);
            y = eps_hat_oracle(q, r + i, {si}, y);
        }
        out.push_back(row("hat_composition", case_id(q, r, s, x), eps_hat_oracle(q, r, s, x), y));
    }

    Rng g4(seed, "delta_split");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g4.uniform(1, 3)), n = static_cast<int>(g4.uniform(1, 3));
        QVec s = sorted_s(g4, n + 1);
        QVec sp;
        for (int i = 0; i < n; ++i) sp.push_back(eps_hat_oracle(q, r, {s[0]}, s[i + 1]));
        Q lhs = delta_oracle(q, r, s);
        Q rhs = delta_oracle(q, r, {s[0]}) + delta_oracle(q, r + 1, sp);
        out.push_back(row("delta_split", case_id(q, r, s, 0), lhs, rhs));
    }

    Rng g5(seed, "delta_recursion");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g5.uniform(1, 3)), n = static_cast<int>(g5.uniform(0, 3));
        QVec s;
        for (int i = 0; i <= n; ++i) s.push_back(g5.positive_rational(16, 4));
        QVec head = slice(s, 0, n);
        Q lhs = delta_oracle(q, r, s);
        Q rhs = delta_oracle(q, r, head) + Q(q - 1) / (qpow_int(q, r + n + 1) - 1) * eps_hat_oracle(q, r, head, s[n]);
        out.push_back(row("delta_recursion", case_id(q, r, s, 0), lhs, rhs));
    }

    Rng g6(seed, "simplex_linearity");
    for (int t = 0; t < trials; ++t) {
        int r = static_cast<int>(g6.uniform(1, 2)), n = static_cast<int>(g6.uniform(1, 2));
        Simplex S = random_simplex(g6, n + 1);
        Cone c = simplex_cone_r(q, r, S);
        QVec a = combo(c, g6), b = combo(c, g6), m(n + 1);
        for (int i = 0; i <= n; ++i) m[i] = (a[i] + b[i]) / 2;
        auto f = [&](const QVec& p) { return eps_oracle(q, r, slice(p, 0, n), p[n]); };
        Q lhs = f(m), rhs = (f(a) + f(b)) / 2;
        std::string id = "q=" + std::to_string(q) + " r=" + std::to_string(r) + " a=(" + join(a) + ") b=(" + join(b) + ")";
        out.push_back(row("simplex_linearity", id, lhs, rhs));
    }
    return out;
}

}  // namespace dtor
