#pragma once

#include "dtor/rational.hpp"

namespace dtor {

// The piecewise-linear functions eps^{r,n}_s, delta^{r,n}, eps_hat^{r,n}_s.
// s is a vector of positive rationals (already raised to the r-th power
// when it comes from a class point), q the field size.

// Direct summation over y in A^n, grouped by which y_i vanish and by degree.
Q eps_oracle(long q, int r, const QVec& s, const Q& x);

// n = 1 closed form; x <= s (including x <= 0) is the h = 0 regime.
Q eps1_closed(long q, int r, const Q& s, const Q& x);
Q eps1_hat_closed(long q, int r, const Q& s, const Q& x);

struct ClosedValue {
    Q value;
    bool fallback = false;  // an intermediate s'_i was not positive; value came from the oracle
};

// Composition of n = 1 hat maps over the sorted s, plus delta.
ClosedValue eps_closed(long q, int r, const QVec& s, const Q& x);
ClosedValue eps_hat_closed(long q, int r, const QVec& s, const Q& x);

Q eps(long q, int r, const QVec& s, const Q& x);
// delta by its defining sum; s is taken in the given order
Q delta(long q, int r, const QVec& s);
Q delta_oracle(long q, int r, const QVec& s);
Q eps_hat(long q, int r, const QVec& s, const Q& x);
Q eps_hat_oracle(long q, int r, const QVec& s, const Q& x);

// Inverse of the increasing bijection eps^{r,n}_s on [0, inf).
Q eps_inverse(long q, int r, const QVec& s, const Q& y);

}  // namespace dtor
