#include "dtor/norms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dtor/ratfunc.hpp"

namespace dtor {

Q norm_eval(const WeightedNorm& mu, const PVec& x) {
    if (static_cast<int>(x.size()) != mu.n()) throw std::invalid_argument("norm: length mismatch");
    Q m = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = std::max(m, Q(mu.weights[i] * qpow_int(mu.q, x[i].degree())));
    return m;
}

namespace {

// ratio = q^e exactly
bool q_log(const Q& ratio, long q, long& e) {
    if (ratio <= 0) return false;
    Z num = ratio.get_num(), den = ratio.get_den();
    e = 0;
    while (num > 1 && num % q == 0) {
        num /= q;
        ++e;
    }
    while (den > 1 && den % q == 0) {
        den /= q;
        --e;
    }
    return num == 1 && den == 1;
}

std::vector<int> leading_vector(const WeightedNorm& mu, const PVec& v, const Q& m) {
    std::vector<int> lt(v.size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero() && mu.weights[j] * qpow_int(mu.q, v[j].degree()) == m) lt[j] = v[j].lead();
    return lt;
}

// a nonzero combination c with sum c_i vecs_i = 0, if any
bool fq_dependency(const Fq& F, const std::vector<std::vector<int>>& vecs, std::vector<int>& c) {
    size_t m = vecs.size();
    if (m == 0) return false;
    size_t n = vecs[0].size();
    std::vector<std::vector<int>> red, comb;
    std::vector<size_t> piv;
    for (size_t i = 0; i < m; ++i) {
        std::vector<int> v = vecs[i], e(m, 0);
        e[i] = 1;
        for (size_t k = 0; k < red.size(); ++k) {
            int f = v[piv[k]];
            if (!f) continue;
            for (size_t j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(f, red[k][j]));
            for (size_t j = 0; j < m; ++j) e[j] = F.sub(e[j], F.mul(f, comb[k][j]));
        }
        size_t p = 0;
        while (p < n && v[p] == 0) ++p;
        if (p == n) {
            c = e;
            return true;
        }
        int inv = F.inv(v[p]);
        for (auto& x : v) x = F.mul(x, inv);
        for (auto& x : e) x = F.mul(x, inv);
        red.push_back(v);
        comb.push_back(e);
        piv.push_back(p);
    }
    return false;
}

struct RowData {
    Q norm;
    std::vector<int> lt;
};

std::vector<RowData> row_data(const WeightedNorm& mu, const PMat& rows) {
    std::vector<RowData> d;
    for (const auto& r : rows) {
        Q m = norm_eval(mu, r);
        d.push_back({m, leading_vector(mu, r, m)});
    }
    return d;
}

// groups of row indices whose norms differ by powers of q
std::vector<std::vector<size_t>> norm_classes(long q, const std::vector<RowData>& d) {
    std::vector<std::vector<size_t>> g;
    for (size_t i = 0; i < d.size(); ++i) {
        bool placed = false;
        for (auto& grp : g) {
            long e;
            if (q_log(d[i].norm / d[grp[0]].norm, q, e)) {
                grp.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) g.push_back({i});
    }
    return g;
}

const Fq& field_of(const PMat& m) {
    for (const auto& r : m)
        for (const auto& x : r)
            if (x.has_field()) return x.field();
    throw std::invalid_argument("matrix without a field");
}

bool row_less(const PVec& a, const PVec& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

RMatrix to_rmatrix(const PMat& m) {
    RMatrix r;
    for (const auto& row : m) {
        std::vector<RatFunc> v;
        for (const auto& x : row) v.emplace_back(x);
        r.push_back(v);
    }
    return r;
}

}  // namespace

bool is_orthonormal(const WeightedNorm& mu, const PMat& rows) {
    if (rows.empty()) return true;
    for (const auto& r : rows)
        if (norm_eval(mu, r) == 0) return false;
    const Fq& F = field_of(rows);
    auto d = row_data(mu, rows);
    for (const auto& grp : norm_classes(mu.q, d)) {
        std::vector<std::vector<int>> lts;
        for (size_t i : grp) lts.push_back(d[i].lt);
        std::vector<int> c;
        if (fq_dependency(F, lts, c)) return false;
    }
    return true;
}

Poly poly_det(const PMat& m) {
    size_t n = m.size();
    const Fq& F = field_of(m);
    if (n == 0) return Poly::constant(F, 1);
    if (n == 1) return m[0][0];
    Poly total(F);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PMat minor;
        for (size_t i = 1; i < n; ++i) {
            PVec row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Poly t = m[0][j] * poly_det(minor);
        total = (j % 2) ? total - t : total + t;
    }
    return total;
}

PMat identity_pmat(const Fq& F, int n) {
    PMat m(n, PVec(n, Poly(F)));
    for (int i = 0; i < n; ++i) m[i][i] = Poly::constant(F, 1);
    return m;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
    const Fq& F = field_of(b);
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    PMat c(n, PVec(m, Poly(F)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (!a[i][l].is_zero())
                for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    return c;
}

PMat reduce_basis(const WeightedNorm& mu, const PMat& gens) {
    if (static_cast<int>(gens.size()) != mu.n()) throw std::invalid_argument("need n generators");
    if (gens.empty()) return gens;
    if (poly_det(gens).is_zero()) throw std::invalid_argument("degenerate generators");
    const Fq& F = field_of(gens);
    PMat rows = gens;
    for (;;) {
        auto d = row_data(mu, rows);
        bool changed = false;
        for (const auto& grp : norm_classes(mu.q, d)) {
            std::vector<std::vector<int>> lts;
            for (size_t i : grp) lts.push_back(d[i].lt);
            std::vector<int> c;
            if (!fq_dependency(F, lts, c)) continue;
            size_t k = grp.size();
            for (size_t t = 0; t < grp.size(); ++t)
                if (c[t] && (k == grp.size() || d[grp[t]].norm > d[grp[k]].norm)) k = t;
            size_t rk = grp[k];
            PVec v = rows[rk];
            for (size_t t = 0; t < grp.size(); ++t) {
                if (t == k || !c[t]) continue;
                long e;
                q_log(d[rk].norm / d[grp[t]].norm, mu.q, e);
                int f = F.div(c[t], c[k]);
                for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] + rows[grp[t]][j].scale(f).shift(static_cast<int>(e));
            }
            rows[rk] = v;
            changed = true;
            break;
        }
        if (!changed) break;
    }
    std::vector<std::pair<Q, PVec>> keyed;
    for (const auto& r : rows) keyed.push_back({norm_eval(mu, r), r});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return row_less(a.second, b.second);
    });
    PMat out;
    for (auto& k : keyed) out.push_back(k.second);
    return out;
}

Minima successive_minima(const WeightedNorm& mu, const PMat& gens) {
    PMat b = reduce_basis(mu, gens);
    int n = mu.n();
    Minima res;
    if (n == 0) return res;
    const Fq& F = field_of(b);
    QVec nb;
    for (const auto& r : b) nb.push_back(norm_eval(mu, r));
    PMat chosen;  // coordinates in the reduced basis
    for (int i = 0; i < n; ++i) {
        auto outside = [&](const PVec& a) {
            PMat m = chosen;
            m.push_back(a);
            return rf_rank(to_rmatrix(m)) == static_cast<int>(m.size());
        };
        Q M = -1;
        for (int j = 0; j < n; ++j) {
            PVec e(n, Poly(F));
            e[j] = Poly::constant(F, 1);
            if (outside(e) && (M < 0 || nb[j] < M)) M = nb[j];
        }
        std::vector<std::vector<Poly>> choices(n);
        for (int j = 0; j < n; ++j) {
            int D = -1;
            while (qpow_int(mu.q, D + 1) * nb[j] <= M) ++D;
            choices[j] = polys_below_degree(F, D + 1);
        }
        bool have = false;
        Q best;
        PVec best_v, best_a;
        PVec a(n, Poly(F));
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                bool zero = std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
                if (zero) return;
                PVec v(n, Poly(F));
                for (int l = 0; l < n; ++l)
                    if (!a[l].is_zero())
                        for (int c = 0; c < n; ++c) v[c] = v[c] + a[l] * b[l][c];
                Q m = norm_eval(mu, v);
                if (have && (m > best || (m == best && !row_less(v, best_v)))) return;
                if (!outside(a)) return;
                have = true;
                best = m;
                best_v = v;
                best_a = a;
                return;
            }
            for (const auto& p : choices[j]) {
                a[j] = p;
                rec(j + 1);
            }
        };
        rec(0);
        if (!have) throw std::logic_error("successive minima search found nothing");
        chosen.push_back(best_a);
        res.basis.push_back(best_v);
        res.profile.push_back(best);
    }
    return res;
}

bool satisfies_minima_conditions(const WeightedNorm& mu, const PMat& gens, const PMat& rows, std::string* why) {
    auto fail = [&](const char* w) {
        if (why) *why = w;
        return false;
    };
    if (rows.size() != gens.size()) return fail("wrong number of rows");
    if (rows.empty()) return true;
    RMatrix u = rf_mul(to_rmatrix(rows), rf_inverse(to_rmatrix(gens)));
    for (const auto& r : u)
        for (const auto& x : r)
            if (x.den().degree() != 0) return fail("rows outside the lattice");
    Poly dr = poly_det(rows), dg = poly_det(gens);
    if (dr.degree() != dg.degree()) return fail("rows do not span the lattice");
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (norm_eval(mu, rows[i]) > norm_eval(mu, rows[i + 1])) return fail("norms not increasing");
    if (!is_orthonormal(mu, rows)) return fail("not orthonormal");
    return true;
}

bool basis_change_check(const WeightedNorm& mu, const PMat& base, const PMat& a, std::string* why) {
    auto fail = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    size_t n = base.size();
    if (a.size() != n) return fail("size mismatch");
    QVec m;
    for (const auto& r : base) m.push_back(norm_eval(mu, r));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            if (m[j] > m[i]) return fail("(i) fails at " + std::to_string(i + 1) + "," + std::to_string(j + 1));
            if (qpow_int(mu.q, a[i][j].degree()) * m[j] > m[i])
                return fail("(ii) fails at " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
    for (size_t k = 0; k < n;) {
        size_t e = k;
        while (e < n && m[e] == m[k]) ++e;
        PMat blk;
        for (size_t i = k; i < e; ++i) blk.emplace_back(a[i].begin() + k, a[i].begin() + e);
        for (const auto& r : blk)
            for (const auto& x : r)
                if (x.degree() > 0) return fail("(iii) block not constant");
        if (poly_det(blk).is_zero()) return fail("(iii) block singular");
        k = e;
    }
    return true;
}

ClassPoint norm_class(const QVec& profile, int r) {
    ClassPoint c;
    c.r = r;
    c.d = r + static_cast<int>(profile.size());
    for (const auto& s : profile) c.powers.push_back(qpow(s, r));
    return c.canonical();
}

}  // namespace dtor
