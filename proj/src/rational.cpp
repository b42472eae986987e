#include "dtor/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace dtor {

Q qpow(const Q& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("qpow: zero to negative power");
        Q inv = 1 / base;
        return qpow(inv, -e);
    }
    Q r = 1, b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

Z zpow(long base, unsigned long e) {
    Z r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1)) r = -r;
    return r;
}

Q qpow_int(long base, long e) {
    if (e >= 0) return Q(zpow(base, static_cast<unsigned long>(e)));
    return Q(1) / Q(zpow(base, static_cast<unsigned long>(-e)));
}

Z floor_q(const Q& x) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& x) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto ok = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok(num) || !ok(den)) throw std::invalid_argument("bad rational: " + raw);
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    Z n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
    Q q(n, d);
    q.canonicalize();
    return q;
}

QVec parse_rational_list(const std::string& s, char sep) {
    QVec out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(parse_rational(cur));
    return out;
}

std::string to_string(const Q& x) { return x.get_str(); }
std::string to_string(const Z& x) { return x.get_str(); }

std::string join(const QVec& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

long ceil_log_ratio(const Q& x, const Q& s, long base, long r) {
    if (x <= s) return 0;
    long h = 0;
    Q bound = s;
    Q step = qpow_int(base, r);
    while (bound < x) {
        bound *= step;
        ++h;
    }
    return h;
}

Z gcd_vec(const ZVec& v) {
    Z g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

ZVec primitive(const ZVec& v) {
    Z g = gcd_vec(v);
    if (g == 0) return v;
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

ZVec primitive(const QVec& v) {
    Z l = 1;
    for (const auto& x : v) l = lcm(l, Z(x.get_den()));
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Q t = v[i] * l;
        z[i] = t.get_num();
    }
    return primitive(z);
}

QVec to_q(const ZVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Q(v[i]);
    return out;
}

}  // namespace dtor
