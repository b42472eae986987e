#include "dtor/ratfunc.hpp"

#include <stdexcept>

namespace dtor {

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::x_power(const Fq& F, int k) {
    if (k >= 0) return RatFunc(Poly::monomial(F, 1, k));
    return RatFunc(Poly::constant(F, 1), Poly::monomial(F, 1, -k));
}

void RatFunc::normalize() {
    const Fq& F = den_.field();
    if (num_.is_zero()) {
        num_ = Poly(F);
        den_ = Poly::constant(F, 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
    int l = F.inv(den_.lead());
    num_ = num_.scale(l);
    den_ = den_.scale(l);
}

int RatFunc::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return num_.low_degree() - den_.low_degree();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.degree() == 0) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RMatrix rf_mul(const RMatrix& a, const RMatrix& b) {
    const Fq& F = a[0][0].field();
    size_t n = a.size(), m = b[0].size(), k = b.size();
    RMatrix r(n, std::vector<RatFunc>(m, RatFunc::zero(F)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    return r;
}

std::vector<RatFunc> rf_apply(const RMatrix& m, const std::vector<RatFunc>& v) {
    const Fq& F = v[0].field();
    std::vector<RatFunc> r(m.size(), RatFunc::zero(F));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = r[i] + m[i][j] * v[j];
    return r;
}

RMatrix rf_inverse(const RMatrix& m) {
    size_t n = m.size();
    const Fq& F = m[0][0].field();
    RMatrix a = m;
    RMatrix inv(n, std::vector<RatFunc>(n, RatFunc::zero(F)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = RatFunc::one(F);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix over F_q(X)");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatFunc p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RatFunc f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

int rf_rank(const RMatrix& m) {
    if (m.empty()) return 0;
    RMatrix a = m;
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            RatFunc f = a[i][col] / a[rank][col];
            for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace dtor
