#pragma once

#include <vector>

#include "dtor/rational.hpp"

namespace oracle {

using dtor::Q;
using dtor::QVec;

// |y|^r for each y in F_q[T] with deg y < D, listed one entry per polynomial
inline std::vector<Q> abs_powers(long q, int r, int D) {
    std::vector<Q> out;
    long total = 1;
    for (int i = 0; i < D; ++i) total *= q;
    for (long code = 0; code < total; ++code) {
        int deg = -1;
        long c = code;
        for (int i = 0; c > 0; ++i, c /= q)
            if (c % q != 0) deg = i;
        out.push_back(deg < 0 ? Q(0) : dtor::qpow_int(q, static_cast<long>(deg) * r));
    }
    return out;
}

// sum over every tuple y in A^n of max(x - max_i |y_i|^r s_i, 0); polynomials enumerated one by one
inline Q eps_brute(long q, int r, const QVec& s, const Q& x) {
    size_t n = s.size();
    int D = 1;
    for (const auto& si : s)
        while (dtor::qpow_int(q, static_cast<long>(D) * r) * si < x) ++D;
    auto ab = abs_powers(q, r, D + 1);
    Q total = 0;
    std::vector<size_t> idx(n, 0);
    while (true) {
        Q mx = 0;
        for (size_t i = 0; i < n; ++i) mx = std::max(mx, Q(ab[idx[i]] * s[i]));
        if (mx < x) total += x - mx;
        size_t k = 0;
        while (k < n && ++idx[k] == ab.size()) idx[k++] = 0;
        if (k == n) break;
    }
    return total;
}

}  // namespace oracle
