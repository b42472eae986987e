#pragma once

#include <cstdint>
#include <vector>

#include "dtor/report.hpp"

namespace dtor {

// The ε̂/δ identities (scaling, composition, hat-composition, delta splitting,
// delta recursion) and piecewise linearity of ε on simplex cones, each at
// `trials` seeded random points satisfying its hypotheses.
std::vector<ReportRow> verify_identities(long q, int trials, std::uint64_t seed);

}  // namespace dtor
