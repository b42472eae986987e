#include "dtor/additive.hpp"

#include <algorithm>

namespace dtor {

AddSeries::AddSeries(const Fq& F, std::vector<Laurent> c, bool polynomial) : F_(&F), c_(std::move(c)), poly_(polynomial) {
    if (poly_)
        while (!c_.empty() && c_.back().is_zero() && c_.back().is_exact()) c_.pop_back();
}

AddSeries AddSeries::identity(const Fq& F) { return poly(F, {Laurent::one(F)}); }

AddSeries AddSeries::scalar(const Laurent& c) { return poly(c.field(), {c}); }

int AddSeries::degree() const {
    for (int i = bound(); i >= 0; --i)
        if (!c_[i].is_zero()) return i;
    return -1;
}

const Laurent& AddSeries::coeff(int i) const {
    if (i < 0 || i > bound()) throw std::out_of_range("tau coefficient out of stored range");
    return c_[i];
}

Laurent AddSeries::coeff_or_zero(int i) const {
    if (i >= 0 && i <= bound()) return c_[i];
    if (!poly_) throw PrecisionError("tau coefficient beyond the truncation bound");
    return Laurent::zero(*F_);
}

AddSeries AddSeries::operator+(const AddSeries& o) const {
    const Fq& F = *F_;
    bool p = poly_ && o.poly_;
    int b;
    if (p)
        b = std::max(bound(), o.bound());
    else if (!poly_ && !o.poly_)
        b = std::min(bound(), o.bound());
    else
        b = poly_ ? o.bound() : bound();
    std::vector<Laurent> r;
    for (int i = 0; i <= b; ++i) {
        Laurent x = (i <= bound()) ? c_[i] : Laurent::zero(F);
        Laurent y = (i <= o.bound()) ? o.c_[i] : Laurent::zero(F);
        r.push_back(x + y);
    }
    return AddSeries(F, std::move(r), p);
}

AddSeries AddSeries::operator-() const {
    std::vector<Laurent> r;
    for (const auto& c : c_) r.push_back(-c);
    return AddSeries(*F_, std::move(r), poly_);
}

AddSeries AddSeries::operator-(const AddSeries& o) const { return *this + (-o); }

AddSeries AddSeries::scale(const Laurent& c) const {
    std::vector<Laurent> r;
    for (const auto& x : c_) r.push_back(c * x);
    return AddSeries(*F_, std::move(r), poly_);
}

AddSeries AddSeries::truncate_tau(int M) const {
    if (M >= bound()) return *this;
    std::vector<Laurent> r(c_.begin(), c_.begin() + M + 1);
    return AddSeries(*F_, std::move(r), false);
}

AddSeries AddSeries::truncate_t(long P) const {
    std::vector<Laurent> r;
    for (const auto& x : c_) r.push_back(x.truncate(P));
    return AddSeries(*F_, std::move(r), poly_);
}

AddSeries AddSeries::as_polynomial(int deg) const {
    std::vector<Laurent> r;
    for (int i = 0; i <= deg && i <= bound(); ++i) r.push_back(c_[i]);
    return AddSeries(*F_, std::move(r), true);
}

Laurent AddSeries::eval(const Laurent& z) const {
    if (!poly_) throw PrecisionError("evaluation of a tau-truncated series");
    const Fq& F = *F_;
    Laurent acc = Laurent::zero(F);
    Laurent zp = z;
    for (int i = 0; i <= bound(); ++i) {
        if (i > 0) zp = zp.frobenius(1);
        acc = acc + c_[i] * zp;
    }
    return acc;
}

std::vector<std::pair<long, Laurent>> AddSeries::z_terms() const {
    std::vector<std::pair<long, Laurent>> out;
    long e = 1;
    for (int i = 0; i <= bound(); ++i) {
        out.emplace_back(e, c_[i]);
        e *= F_->q();
    }
    return out;
}

std::string AddSeries::text() const {
    std::string out;
    long e = 1;
    for (int i = 0; i <= bound(); ++i) {
        if (!c_[i].is_zero() || !c_[i].is_exact()) {
            if (!out.empty()) out += " + ";
            out += "[" + c_[i].text() + "] z^" + std::to_string(e);
        }
        e *= F_->q();
    }
    if (out.empty()) out = "0";
    if (!poly_) out += " + O(z^" + std::to_string(e) + ")";
    return out;
}

AddSeries skew_compose(const AddSeries& f, const AddSeries& g, int tau_cap, long t_cap) {
    const Fq& F = f.field();
    bool poly = f.is_polynomial() && g.is_polynomial();
    int b;
    if (poly)
        b = f.bound() + g.bound();
    else if (!f.is_polynomial() && !g.is_polynomial())
        b = std::min(f.bound(), g.bound());
    else
        b = f.is_polynomial() ? g.bound() : f.bound();
    if (b > tau_cap) {
        b = tau_cap;
        poly = false;
    }
    if (b < 0) return AddSeries(F, {}, poly);
    std::vector<Laurent> r(b + 1, Laurent::zero(F));
    for (int i = 0; i <= b && i <= f.bound(); ++i) {
        const Laurent& fi = f.coeff(i);
        if (fi.is_zero() && fi.is_exact()) continue;
        for (int j = 0; i + j <= b && j <= g.bound(); ++j) {
            const Laurent& gj = g.coeff(j);
            if (gj.is_zero() && gj.is_exact()) continue;
            long cap = t_cap;
            if (t_cap < Laurent::kExact) {
                // factor needed only below t_cap - v(f_i)
                long vf = fi.is_zero() ? fi.precision() : fi.valuation();
                cap = t_cap - std::min(vf, t_cap);
                cap = std::max(cap, 0L);
            }
            Laurent term = fi * gj.frobenius(i, cap);
            r[i + j] = (r[i + j] + term).truncate(t_cap);
        }
    }
    for (auto& x : r) x = x.truncate(t_cap);
    return AddSeries(F, std::move(r), poly);
}

AddSeries compositional_inverse(const AddSeries& e, int M, long t_cap) {
    const Fq& F = e.field();
    const Laurent& e0 = e.coeff(0);
    if (e0.is_zero() || e0.valuation() != 0) throw std::domain_error("tau^0 coefficient is not a unit");
    long rel = t_cap < Laurent::kExact ? t_cap + 1 : 64;
    Laurent e0i = e0.inv(rel).truncate(t_cap);
    std::vector<Laurent> g;
    g.push_back(e0i);
    for (int k = 1; k <= M; ++k) {
        Laurent s = Laurent::zero(F);
        for (int i = 1; i <= k; ++i) {
            Laurent ei = e.coeff_or_zero(i);
            if (ei.is_zero() && ei.is_exact()) continue;
            s = s + ei * g[k - i].frobenius(i, t_cap);
        }
        g.push_back((-(e0i * s)).truncate(t_cap));
    }
    return AddSeries(F, std::move(g), false);
}

}  // namespace dtor
