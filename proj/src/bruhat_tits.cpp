#include "dtor/bruhat_tits.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace dtor {

Lattice Lattice::diagonal(std::vector<long> a) {
    Lattice L;
    L.diag_ = true;
    L.a_ = std::move(a);
    return L;
}

Lattice Lattice::from_basis(RMatrix cols) {
    if (cols.empty() || cols.size() != cols[0].size()) throw std::invalid_argument("lattice basis must be square");
    if (rf_rank(cols) != static_cast<int>(cols.size())) throw std::invalid_argument("lattice basis is singular");
    Lattice L;
    L.diag_ = false;
    L.b_ = std::move(cols);
    return L;
}

int Lattice::n() const { return diag_ ? static_cast<int>(a_.size()) : static_cast<int>(b_.size()); }

RMatrix Lattice::basis(const Fq& F) const {
    if (!diag_) return b_;
    int n = this->n();
    RMatrix m(n, std::vector<RatFunc>(n, RatFunc::zero(F)));
    for (int i = 0; i < n; ++i) m[i][i] = RatFunc::x_power(F, static_cast<int>(a_[i]));
    return m;
}

Lattice Lattice::scaled(long t) const {
    if (diag_) {
        auto a = a_;
        for (auto& x : a) x += t;
        return diagonal(a);
    }
    RMatrix b = b_;
    RatFunc c = RatFunc::x_power(b_[0][0].field(), static_cast<int>(t));
    for (auto& row : b)
        for (auto& x : row) x = x * c;
    return from_basis(b);
}

std::string Lattice::str() const {
    std::string s;
    if (diag_) {
        s = "diag(";
        for (size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
        return s + ")";
    }
    s = "[";
    for (size_t i = 0; i < b_.size(); ++i) {
        s += i ? ";" : "";
        for (size_t j = 0; j < b_[i].size(); ++j) s += (j ? "," : "") + b_[i][j].str();
    }
    return s + "]";
}

namespace {

long min_valuation(const RMatrix& m) {
    long v = LONG_MAX;
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) v = std::min<long>(v, x.valuation());
    return v;
}

}  // namespace

long lattice_norm_exp(const Fq& F, const Lattice& L, const std::vector<RatFunc>& x) {
    if (static_cast<int>(x.size()) != L.n()) throw std::invalid_argument("vector length mismatch");
    long best = LONG_MAX;
    if (L.is_diagonal()) {
        for (size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) best = std::min(best, x[i].valuation() - L.exponents()[i]);
    } else {
        auto y = rf_apply(rf_inverse(L.basis(F)), x);
        for (const auto& c : y)
            if (!c.is_zero()) best = std::min<long>(best, c.valuation());
    }
    if (best == LONG_MAX) throw std::invalid_argument("norm of the zero vector");
    return -best;
}

Q lattice_norm(const Fq& F, const Lattice& L, const std::vector<RatFunc>& x) {
    return qpow_int(F.q(), lattice_norm_exp(F, L, x));
}

long containment_level(const Fq& F, const Lattice& L, const Lattice& Lp) {
    if (L.n() != Lp.n()) throw std::invalid_argument("lattice rank mismatch");
    if (L.is_diagonal() && Lp.is_diagonal()) {
        long t = LONG_MAX;
        for (int i = 0; i < L.n(); ++i) t = std::min(t, Lp.exponents()[i] - L.exponents()[i]);
        return t;
    }
    return min_valuation(rf_mul(rf_inverse(L.basis(F)), Lp.basis(F)));
}

bool same_class(const Fq& F, const Lattice& L, const Lattice& Lp) {
    return containment_level(F, L, Lp) + containment_level(F, Lp, L) == 0;
}

std::vector<long> diagonal_class(const Lattice& L) {
    if (!L.is_diagonal()) throw std::invalid_argument("not a diagonal lattice");
    auto a = L.exponents();
    if (a.empty()) return a;
    long m = *std::min_element(a.begin(), a.end());
    for (auto& x : a) x -= m;
    return a;
}

namespace {

Simplex distinct_classes(const Fq& F, const Simplex& S) {
    Simplex out;
    for (const auto& L : S) {
        bool seen = false;
        for (const auto& M : out)
            if (same_class(F, L, M)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(L);
    }
    return out;
}

void diagonal_witness(const Fq& F, const Lattice& L, const Lattice& Lp, ChainResult& res) {
    const auto& a = L.exponents();
    int n = L.n();
    std::vector<long> d(n);
    for (int i = 0; i < n; ++i) d[i] = a[i] - Lp.exponents()[i];
    int i = static_cast<int>(std::min_element(d.begin(), d.end()) - d.begin());
    int j = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
    long t = d[i] + 1;
    res.x.assign(n, RatFunc::zero(F));
    res.y.assign(n, RatFunc::zero(F));
    res.x[i] = RatFunc::x_power(F, static_cast<int>(a[i]));
    res.y[j] = RatFunc::x_power(F, static_cast<int>(Lp.exponents()[j] + t));
}

}  // namespace

ChainResult chain_test(const Fq& F, const Simplex& S) {
    ChainResult res;
    if (S.empty()) return res;
    Simplex cls = distinct_classes(F, S);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (containment_level(F, cls[i], cls[j]) + containment_level(F, cls[j], cls[i]) < -1) {
                if (cls[i].is_diagonal() && cls[j].is_diagonal()) diagonal_witness(F, cls[i], cls[j], res);
                return res;
            }
    Simplex reps;
    for (const auto& L : cls) reps.push_back(L.scaled(-containment_level(F, cls[0], L)));
    std::sort(reps.begin() + 1, reps.end(),
              [&](const Lattice& A, const Lattice& B) { return containment_level(F, A, B) >= 0 && !same_class(F, A, B); });
    for (size_t i = 0; i + 1 < reps.size(); ++i)
        if (containment_level(F, reps[i], reps[i + 1]) < 0) throw std::logic_error("pairwise adjacent classes not a chain");
    if (containment_level(F, reps.back(), reps[0].scaled(1)) < 0) throw std::logic_error("chain does not contain m L^0");
    res.simplex = true;
    res.chain = reps;
    return res;
}

bool violates_c(const Fq& F, const Simplex& S, const std::vector<RatFunc>& x, const std::vector<RatFunc>& y) {
    bool less = false, more = false;
    for (const auto& L : S) {
        long d = lattice_norm_exp(F, L, x) - lattice_norm_exp(F, L, y);
        less |= d < 0;
        more |= d > 0;
    }
    return less && more;
}

QVec lattice_weights(long q, const Lattice& L, int r) {
    if (!L.is_diagonal()) throw std::invalid_argument("cones need apartment lattices");
    QVec w;
    for (long a : diagonal_class(L)) w.push_back(qpow_int(q, a * r));
    return w;
}

Cone simplex_cone_r(long q, int r, const Simplex& S) {
    if (S.empty()) throw std::invalid_argument("empty simplex");
    std::vector<QVec> rays;
    for (const auto& L : S) rays.push_back(lattice_weights(q, L, r));
    return Cone::from_rays_q(S[0].n(), rays);
}

Cone simplex_cone(long q, const Simplex& S) { return simplex_cone_r(q, 1, S); }

bool realization_membership(long q, const Simplex& S, const QVec& weights) {
    return simplex_cone(q, S).contains(weights);
}

IntersectionCheck intersection_property_check(long q, const Simplex& S, const Simplex& Sp) {
    IntersectionCheck res;
    Simplex common;
    for (const auto& L : S)
        for (const auto& M : Sp)
            if (diagonal_class(L) == diagonal_class(M)) {
                common.push_back(L);
                break;
            }
    res.lhs = simplex_cone(q, S).intersect(simplex_cone(q, Sp));
    if (common.empty()) {
        res.empty = true;
        res.rhs = Cone::zero(S[0].n());
        res.holds = res.lhs == res.rhs;
        return res;
    }
    res.rhs = simplex_cone(q, common);
    res.holds = res.lhs == res.rhs;
    return res;
}

Simplex standard_simplex(int n) {
    Simplex S;
    for (int i = 0; i < n; ++i) {
        std::vector<long> a(n, 0);
        for (int j = n - i; j < n; ++j) a[j] = 1;
        S.push_back(Lattice::diagonal(a));
    }
    return S;
}

Simplex ap2_edge(int h) { return {Lattice::diagonal({0, h - 1}), Lattice::diagonal({0, h})}; }

}  // namespace dtor
