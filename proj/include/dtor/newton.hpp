#pragma once

#include <utility>
#include <vector>

#include "dtor/laurent.hpp"
#include "dtor/rational.hpp"

namespace dtor {

struct Slope {
    Q root_valuation;
    long multiplicity;
};

// Valuations of the nonzero roots of sum_x c_x z^x. Terms are (x, c_x) with
// distinct x >= 1. Throws PrecisionError when a vertex of the lower hull
// cannot be resolved from the known digits.
std::vector<Slope> newton_slopes(std::vector<std::pair<long, Laurent>> terms);

// The slopes unrolled into a sorted multiset.
std::vector<Q> expand_slopes(const std::vector<Slope>& s);

}  // namespace dtor
