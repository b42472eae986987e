#pragma once

#include <string>

#include "dtor/rational.hpp"

namespace dtor {

// A point (0^{r-1}, s_r, ..., s_{d-1}) of C_d kept as its r-th powers.
// powers has length d-r; r = d means the zero vector.
struct ClassPoint {
    int d = 1;
    int r = 1;
    QVec powers;
    bool projective = false;

    // the length d-1 power-coordinate vector with leading zeros
    QVec full_powers() const;
    // plain coordinates; only possible when every s_i is rational
    bool plain(QVec& out) const;
    // scale so the largest coordinate is 1
    ClassPoint canonical() const;
    bool valid() const;
    std::string str() const;
};

ClassPoint class_point_from_powers(const QVec& full_powers, bool projective = false);

// exact r-th root of a nonnegative rational, if there is one
bool exact_root(const Q& x, int r, Q& out);

}  // namespace dtor
