#include "dtor/poly.hpp"

#include <cctype>

#include <algorithm>
#include <stdexcept>

namespace dtor {

Poly::Poly(const Fq& F, std::vector<int> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Fq& F, int c) { return Poly(F, {c}); }

Poly Poly::monomial(const Fq& F, int c, int deg) {
    std::vector<int> v(deg + 1, 0);
    v[deg] = c;
    return Poly(F, v);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return -1;
}

Poly Poly::operator+(const Poly& o) const {
    const Fq& F = F_ ? *F_ : *o.F_;
    std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(F, r);
}

Poly Poly::operator-() const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
    return Poly(*F_, r);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    const Fq& F = F_ ? *F_ : *o.F_;
    if (is_zero() || o.is_zero()) return Poly(F);
    std::vector<int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
    return Poly(F, r);
}

Poly Poly::scale(int c) const {
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], c);
    return Poly(*F_, r);
}

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    std::vector<int> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(*F_, r);
}

void Poly::divmod(const Poly& d, Poly& quo, Poly& rem) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Fq& F = *d.F_;
    std::vector<int> r = c_;
    int dd = d.degree();
    int il = F.inv(d.lead());
    std::vector<int> qv(std::max(0, degree() - dd + 1), 0);
    for (int i = degree(); i >= dd; --i) {
        if (!r[i]) continue;
        int f = F.mul(r[i], il);
        qv[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = F.sub(r[i - dd + j], F.mul(f, d.c_[j]));
    }
    quo = Poly(F, qv);
    rem = Poly(F, r);
}

Poly Poly::operator/(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const {
    Poly q, r;
    divmod(d, q, r);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(F_->inv(lead()));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!c_[i]) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i == 0)
            out += std::to_string(c_[i]);
        else if (c_[i] == 1)
            out += mono;
        else
            out += std::to_string(c_[i]) + "*" + mono;
    }
    return out;
}

Poly Poly::parse(const Fq& F, const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Poly acc(F);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw std::invalid_argument("bad polynomial: " + raw);
        int coef = 1, deg = 0;
        size_t star = term.find('*');
        std::string mono = term;
        if (star != std::string::npos) {
            coef = std::stoi(term.substr(0, star));
            mono = term.substr(star + 1);
        }
        if (mono.empty()) throw std::invalid_argument("bad polynomial: " + raw);
        if (std::isdigit(static_cast<unsigned char>(mono[0]))) {
            if (star != std::string::npos) throw std::invalid_argument("bad polynomial: " + raw);
            coef = std::stoi(mono);
            deg = 0;
        } else {
            size_t caret = mono.find('^');
            std::string var = mono.substr(0, caret);
            if (var != "T" && var != "X" && var != "pi" && var != "t")
                throw std::invalid_argument("bad polynomial variable: " + raw);
            deg = caret == std::string::npos ? 1 : std::stoi(mono.substr(caret + 1));
        }
        if (coef < 0 || coef >= F.q() || deg < 0) throw std::invalid_argument("bad polynomial: " + raw);
        acc = acc + monomial(F, coef, deg);
    }
    return acc;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Z abs_value(const Poly& a) {
    if (a.is_zero()) return 0;
    return zpow(a.field().q(), static_cast<unsigned long>(a.degree()));
}

std::vector<Poly> polys_of_degree(const Fq& F, int deg) {
    if (deg < 0) return {Poly(F)};
    std::vector<Poly> out;
    std::vector<int> c(deg + 1, 0);
    // leading coefficient nonzero, lower coefficients in lexicographic order
    for (int lead = 1; lead < F.q(); ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[deg] = lead;
        while (true) {
            out.emplace_back(F, c);
            int i = 0;
            while (i < deg) {
                if (++c[i] < F.q()) break;
                c[i] = 0;
                ++i;
            }
            if (i == deg) break;
        }
    }
    return out;
}

std::vector<Poly> polys_below_degree(const Fq& F, int bound) {
    std::vector<Poly> out;
    for (int d = -1; d < bound; ++d) {
        auto v = polys_of_degree(F, d);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace dtor
