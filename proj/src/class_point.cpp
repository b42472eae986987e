#include "dtor/class_point.hpp"

#include <algorithm>

namespace dtor {

QVec ClassPoint::full_powers() const {
    QVec v(r - 1, 0);
    v.insert(v.end(), powers.begin(), powers.end());
    return v;
}

bool exact_root(const Q& x, int r, Q& out) {
    if (x < 0) return false;
    if (r == 1) {
        out = x;
        return true;
    }
    Z a, b;
    mpz_root(a.get_mpz_t(), x.get_num_mpz_t(), r);
    mpz_root(b.get_mpz_t(), x.get_den_mpz_t(), r);
    Q c(a, b);
    c.canonicalize();
    if (qpow(c, r) != x) return false;
    out = c;
    return true;
}

bool ClassPoint::plain(QVec& out) const {
    out.assign(r - 1, 0);
    for (const auto& p : powers) {
        Q s;
        if (!exact_root(p, r, s)) return false;
        out.push_back(s);
    }
    return true;
}

ClassPoint ClassPoint::canonical() const {
    ClassPoint c = *this;
    c.projective = true;
    if (powers.empty()) return c;
    Q m = *std::max_element(powers.begin(), powers.end());
    for (auto& p : c.powers) p /= m;
    return c;
}

bool ClassPoint::valid() const {
    if (r < 1 || r > d || static_cast<int>(powers.size()) != d - r) return false;
    for (size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] <= 0) return false;
        if (i && powers[i] < powers[i - 1]) return false;
    }
    return true;
}

std::string ClassPoint::str() const { return "r=" + std::to_string(r) + " powers=(" + join(powers) + ")"; }

ClassPoint class_point_from_powers(const QVec& full, bool projective) {
    ClassPoint c;
    c.d = static_cast<int>(full.size()) + 1;
    c.r = 1;
    while (c.r <= static_cast<int>(full.size()) && full[c.r - 1] == 0) ++c.r;
    c.powers.assign(full.begin() + (c.r - 1), full.end());
    c.projective = projective;
    return c;
}

}  // namespace dtor
