#include "dtor/laurent.hpp"

#include <algorithm>

namespace dtor {

long sat_add(long a, long b) {
    if (a >= Laurent::kExact || b >= Laurent::kExact) return Laurent::kExact;
    long s = a + b;
    return s >= Laurent::kExact ? Laurent::kExact : s;
}

Laurent::Laurent(const Fq& F, long v, std::vector<int> c, long prec) : F_(&F), v_(v), c_(std::move(c)), prec_(prec) {
    normalize();
}

void Laurent::normalize() {
    if (prec_ > kExact) prec_ = kExact;
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        v_ = prec_;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        v_ += static_cast<long>(lead);
    }
    if (v_ >= prec_) {
        c_.clear();
        v_ = prec_;
        return;
    }
    if (!is_exact()) {
        long keep = prec_ - v_;
        if (static_cast<long>(c_.size()) > keep) c_.resize(keep);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Laurent Laurent::zero(const Fq& F, long prec) { return Laurent(F, prec, {}, prec); }

Laurent Laurent::monomial(const Fq& F, int c, long e) { return Laurent(F, e, {c}, kExact); }

Laurent Laurent::from_coeffs(const Fq& F, long v, std::vector<int> c, long prec) {
    return Laurent(F, v, std::move(c), prec);
}

Laurent Laurent::from_poly(const Poly& p, long prec) { return Laurent(p.field(), 0, p.coeffs(), prec); }

int Laurent::coeff(long e) const {
    if (e < v_) return 0;
    long i = e - v_;
    if (i >= static_cast<long>(c_.size())) return 0;
    return c_[i];
}

Laurent Laurent::operator+(const Laurent& o) const {
    const Fq& F = F_ ? *F_ : *o.F_;
    long P = std::min(prec_, o.prec_);
    long lo = std::min(v_, o.v_);
    if (lo >= P) return zero(F, P);
    long hi = lo;
    if (!is_zero()) hi = std::max(hi, v_ + static_cast<long>(c_.size()));
    if (!o.is_zero()) hi = std::max(hi, o.v_ + static_cast<long>(o.c_.size()));
    if (P < kExact) hi = std::min(hi, P);
    std::vector<int> r(std::max(0L, hi - lo), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        long e = v_ + static_cast<long>(i) - lo;
        if (e < static_cast<long>(r.size())) r[e] = c_[i];
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        long e = o.v_ + static_cast<long>(i) - lo;
        if (e < static_cast<long>(r.size())) r[e] = F.add(r[e], o.c_[i]);
    }
    return Laurent(F, lo, std::move(r), P);
}

Laurent Laurent::operator-() const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
    return Laurent(*F_, v_, std::move(r), prec_);
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    const Fq& F = F_ ? *F_ : *o.F_;
    long P = std::min(sat_add(v_, o.prec_), sat_add(o.v_, prec_));
    if (is_zero() || o.is_zero()) return zero(F, P);
    long v = v_ + o.v_;
    long len = static_cast<long>(c_.size() + o.c_.size()) - 1;
    if (P < kExact) len = std::min(len, P - v);
    if (len <= 0) return zero(F, P);
    std::vector<int> r(len, 0);
    const std::vector<int>& a = c_.size() <= o.c_.size() ? c_ : o.c_;
    const std::vector<int>& b = c_.size() <= o.c_.size() ? o.c_ : c_;
    long nb = static_cast<long>(b.size());
    for (long i = 0; i < static_cast<long>(a.size()) && i < len; ++i) {
        int ai = a[i];
        if (!ai) continue;
        long lim = std::min(nb, len - i);
        for (long j = 0; j < lim; ++j) {
            int bj = b[j];
            if (bj) r[i + j] = F.add(r[i + j], F.mul(ai, bj));
        }
    }
    return Laurent(F, v, std::move(r), P);
}

Laurent Laurent::inv(long rel_prec) const {
    if (is_zero()) throw PrecisionError("inverse of a series that is zero to its precision");
    const Fq& F = *F_;
    if (is_exact() && c_.size() == 1) return Laurent(F, -v_, {F.inv(c_[0])}, kExact);
    long rel = is_exact() ? rel_prec : prec_ - v_;
    if (is_exact() && rel_prec < 0) throw std::invalid_argument("inverse of an exact non-monomial needs a target precision");
    std::vector<int> b(rel, 0);
    int c0i = F.inv(c_[0]);
    b[0] = c0i;
    long n = static_cast<long>(c_.size());
    for (long k = 1; k < rel; ++k) {
        int s = 0;
        long lim = std::min(k, n - 1);
        for (long i = 1; i <= lim; ++i)
            if (c_[i] && b[k - i]) s = F.add(s, F.mul(c_[i], b[k - i]));
        b[k] = F.neg(F.mul(c0i, s));
    }
    return Laurent(F, -v_, std::move(b), -v_ + rel);
}

Laurent Laurent::pow(long n, long rel_prec) const {
    if (n < 0) return inv(rel_prec).pow(-n, rel_prec);
    Laurent r = one(*F_), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Laurent Laurent::frobenius(int i, long cap) const {
    const Fq& F = *F_;
    long Qp = 1;
    for (int k = 0; k < i; ++k) Qp *= F.q();
    long P = prec_ >= kExact ? kExact : prec_ * Qp;
    if (P >= kExact) P = kExact;
    P = std::min(P, cap);
    if (is_zero()) return zero(F, P);
    long v = v_ * Qp;
    if (v >= P) return zero(F, P);
    long len = (static_cast<long>(c_.size()) - 1) * Qp + 1;
    if (P < kExact) len = std::min(len, P - v);
    std::vector<int> r(len, 0);
    for (size_t j = 0; j < c_.size(); ++j) {
        long e = static_cast<long>(j) * Qp;
        if (e >= len) break;
        r[e] = c_[j];
    }
    return Laurent(F, v, std::move(r), P);
}

Laurent Laurent::truncate(long P) const {
    if (P >= prec_) return *this;
    return Laurent(*F_, v_, c_, P);
}

Laurent Laurent::scale(int c) const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], c);
    return Laurent(*F_, v_, std::move(r), prec_);
}

Laurent Laurent::shift(long k) const {
    long P = is_exact() ? kExact : prec_ + k;
    return Laurent(*F_, is_zero() ? P : v_ + k, c_, P);
}

std::string Laurent::text() const {
    std::string mod = is_exact() ? "" : " mod t^" + std::to_string(prec_);
    if (is_zero()) return "0" + mod;
    std::string body;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!body.empty()) body += " + ";
        std::string c = std::to_string(c_[i]);
        if (i == 0)
            body += c;
        else
            body += (c_[i] == 1 ? "" : c + "*") + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
    }
    return "t^" + std::to_string(v_) + " * (" + body + ")" + mod;
}

}  // namespace dtor
