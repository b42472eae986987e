#pragma once

// e(z) = z prod (1 - z/lambda) over an explicit F_q-span, multiplied out densely.

#include <vector>

#include "oracles/dense.hpp"

namespace oracle {

inline Dense exp_product(const dtor::Fq& F, const std::vector<Laurent>& basis, long P) {
    std::vector<Laurent> span{Laurent::zero(F)};
    for (const auto& b : basis) {
        std::vector<Laurent> next;
        for (int c = 0; c < F.q(); ++c)
            for (const auto& x : span) next.push_back(x + b * Laurent::monomial(F, c, 0));
        span = next;
    }
    Dense acc{&F, {Laurent::zero(F), Laurent::one(F)}};
    for (const auto& lam : span) {
        if (lam.is_zero()) continue;
        Laurent inv = lam.inv(P + 1).truncate(P);
        Dense f{&F, {Laurent::one(F), -inv}};
        acc = dmul(acc, f);
        for (auto& c : acc.c) c = c.truncate(P);
    }
    return acc;
}

}  // namespace oracle
