#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtor/drinfeld.hpp"
#include "dtor/report.hpp"

namespace dtor {

// z-degree q^d of the quotient and v(leading coefficient) = (q^d - 1) delta(s)
// for single steps over the Carlitz module and for two-step towers
std::vector<ReportRow> verify_tate(long t_precision);

struct TorsionInstance {
    long q = 2;
    std::vector<std::string> base;  // phi(T) coefficients of the base, polynomials in t
    std::vector<LatticeStep> steps;
    std::string N;
    std::string id() const;
};
// a fixed list plus `extra` instances with random units drawn from seed
std::vector<TorsionInstance> torsion_instances(int extra, std::uint64_t seed);

// c(phi, N) by xi_k against the Newton polygon of phi(N), and
// c(phi, N) in xi_k(sigma) iff c(phi) in sigma over the cones of Sigma^(k)
std::vector<ReportRow> verify_sigk3(const std::vector<TorsionInstance>& cases, long t_precision);

}  // namespace dtor
