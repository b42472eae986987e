#pragma once

// Dense polynomials in z with Laurent coefficients, for checking the sparse
// q-power representation by plain substitution.

#include <vector>

#include "dtor/additive.hpp"

namespace oracle {

using dtor::Laurent;

struct Dense {
    const dtor::Fq* F;
    std::vector<Laurent> c;  // c[i] is the z^i coefficient
};

inline Dense dense_of(const dtor::AddSeries& s) {
    Dense d{&s.field(), {}};
    long e = 1;
    for (int i = 0; i <= s.bound(); ++i) {
        if (static_cast<long>(d.c.size()) <= e) d.c.resize(e + 1, Laurent::zero(s.field()));
        d.c[e] = s.coeff(i);
        e *= s.field().q();
    }
    if (d.c.empty()) d.c.push_back(Laurent::zero(s.field()));
    return d;
}

inline Dense dmul(const Dense& a, const Dense& b) {
    Dense r{a.F, std::vector<Laurent>(a.c.size() + b.c.size() - 1, Laurent::zero(*a.F))};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
}

inline Dense dadd(const Dense& a, const Dense& b) {
    Dense r{a.F, std::vector<Laurent>(std::max(a.c.size(), b.c.size()), Laurent::zero(*a.F))};
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

// f(g(z)) by Horner
inline Dense substitute(const Dense& f, const Dense& g) {
    Dense acc{f.F, {Laurent::zero(*f.F)}};
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = dmul(acc, g);
        acc.c[0] = acc.c[0] + f.c[i];
    }
    return acc;
}

inline bool dense_equal(const Dense& a, const Dense& b) {
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        Laurent x = i < a.c.size() ? a.c[i] : Laurent::zero(*a.F);
        Laurent y = i < b.c.size() ? b.c[i] : Laurent::zero(*a.F);
        if (!x.agrees(y)) return false;
    }
    return true;
}

}  // namespace oracle
