#pragma once

#include <vector>

#include "dtor/fan.hpp"

namespace oracle {

using dtor::Cone;
using dtor::Fan;
using dtor::ZVec;

// all cones sigma(alpha) for alpha: I -> {<=0, =0, >=0}, closed under faces
inline Fan sign_assignment_fan(long q, int d, int k) {
    int n = d - 1;
    std::vector<ZVec> base;
    ZVec e(n, 0);
    e[0] = 1;
    base.push_back(e);
    for (int i = 1; i < n; ++i) {
        ZVec a(n, 0);
        a[i] = 1;
        a[i - 1] = -1;
        base.push_back(a);
    }
    std::vector<ZVec> forms;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            for (int h = 0; h < k; ++h) {
                ZVec a(n, 0);
                a[j - 1] = dtor::zpow(q, h);
                a[i - 1] -= 1;
                forms.push_back(a);
            }
    std::vector<Cone> cones;
    std::vector<int> alpha(forms.size(), -1);
    while (true) {
        std::vector<ZVec> ineqs = base, eqs;
        for (size_t t = 0; t < forms.size(); ++t) {
            ZVec a = forms[t];
            if (alpha[t] == 0) {
                eqs.push_back(a);
                continue;
            }
            if (alpha[t] < 0)
                for (auto& x : a) x = -x;
            ineqs.push_back(a);
        }
        cones.push_back(Cone::from_ineqs(n, ineqs, eqs));
        size_t t = 0;
        while (t < alpha.size() && ++alpha[t] == 2) alpha[t++] = -1;
        if (t == alpha.size()) break;
    }
    return Fan(n, cones);
}

}  // namespace oracle
