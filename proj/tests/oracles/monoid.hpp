#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dtor/cone.hpp"

namespace oracle {

using dtor::Cone;
using dtor::ZVec;

// x is a nonnegative integer combination of gens; c must be pointed and contain gens
inline bool in_monoid(const Cone& c, const std::vector<ZVec>& gens, const ZVec& x, std::map<ZVec, bool>& memo) {
    bool zero = true;
    for (const auto& v : x) zero = zero && v == 0;
    if (zero) return true;
    if (!c.contains(x)) return false;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
        ZVec y = x;
        for (size_t i = 0; i < y.size(); ++i) y[i] -= g[i];
        if (c.contains(y) && in_monoid(c, gens, y, memo)) {
            ok = true;
            break;
        }
    }
    memo[x] = ok;
    return ok;
}

// every lattice point of c in [-b, b]^n
inline std::vector<ZVec> box_points(const Cone& c, int b) {
    int n = c.ambient();
    std::vector<ZVec> out;
    ZVec x(n, -b);
    while (true) {
        if (c.contains(x)) out.push_back(x);
        int k = 0;
        while (k < n && x[k] == b) x[k++] = -b;
        if (k == n) break;
        x[k] += 1;
    }
    return out;
}

// x = sum c_g g with integers 0 <= c_g <= bound; works for non-pointed monoids
inline bool bounded_combination(const std::vector<ZVec>& gens, const ZVec& x, int bound) {
    std::function<bool(size_t, ZVec)> rec = [&](size_t i, ZVec rest) {
        if (i == gens.size()) {
            for (const auto& v : rest)
                if (v != 0) return false;
            return true;
        }
        for (int c = 0; c <= bound; ++c) {
            if (rec(i + 1, rest)) return true;
            for (size_t j = 0; j < rest.size(); ++j) rest[j] -= gens[i][j];
        }
        return false;
    };
    return rec(0, x);
}

inline bool same_monoid(const std::vector<ZVec>& a, const std::vector<ZVec>& b, int bound = 4) {
    for (const auto& g : a)
        if (!bounded_combination(b, g, bound)) return false;
    for (const auto& g : b)
        if (!bounded_combination(a, g, bound)) return false;
    return true;
}

// every lattice point of sigma's dual with coordinates in [-b, b] is generated
inline bool generates_dual_points(const Cone& sigma, const std::vector<ZVec>& gens, int b) {
    Cone d = sigma.dual();
    std::map<ZVec, bool> memo;
    for (const auto& p : box_points(d, b))
        if (!in_monoid(d, gens, p, memo)) return false;
    return true;
}

// no generator is a sum of two nonzero elements of the monoid of the others
inline bool is_minimal(const std::vector<ZVec>& gens, int bound = 6) {
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<ZVec> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (bounded_combination(rest, gens[i], bound)) return false;
    }
    return true;
}

}  // namespace oracle
