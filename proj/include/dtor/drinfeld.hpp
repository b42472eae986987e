#pragma once

#include <string>
#include <vector>

#include "dtor/additive.hpp"
#include "dtor/class_point.hpp"
#include "dtor/poly.hpp"

namespace dtor {

// Generalized Drinfeld module over F_q((t)) with trivialized line bundle,
// given by phi(T) and a declared generic rank d.
struct DrinfeldModule {
    AddSeries phi_T;
    int d = 1;

    const Fq& field() const { return phi_T.field(); }
    long q() const { return field().q(); }
    Laurent gamma_T() const { return phi_T.coeff(0); }
    // coefficient of z^{q^i} in phi(T)
    Laurent coeff(int i) const { return phi_T.coeff_or_zero(i); }
    std::string text() const;
};

// validates: tau^0 coefficient nonzero, some coefficient of index >= 1 a unit,
// polynomial of tau-degree <= d
DrinfeldModule make_module(const AddSeries& phi_T, int d);
// phi(T) = sum_i c_i z^{q^i} with c_i polynomials in t
DrinfeldModule module_from_strings(const Fq& F, const std::vector<std::string>& coeffs, int d);

AddSeries phi_eval(const DrinfeldModule& phi, const Poly& a, long t_cap = Laurent::kExact);

// largest i with c(T, q^i) a unit
int reduction_rank(const DrinfeldModule& phi);

// lambda = unit * t^{-m}; an empty unit means 1
struct LatticeStep {
    long m = 1;
    Poly unit;
};

Laurent lattice_generator(const Fq& F, const LatticeStep& step);

// -q v(f) + m (q^r - 1)(q - 1) >= 0 with f = c(T, q^r) and r = deg_tau psi(T)
bool admissible(const DrinfeldModule& psi, const LatticeStep& step, std::string* why = nullptr);

struct Exponential {
    AddSeries e;                 // known modulo t^precision
    std::vector<Laurent> basis;  // psi(T^j)(lambda), j = 0..D
    std::vector<long> neg_val;   // -v of the basis elements
    long precision = 0;
};

// e(z) = z prod (1 - z/lambda) over the nonzero lambda in psi(A) lambda_0 with
// -v(lambda) <= cutoff; cutoff defaults to t_precision
Exponential exp_from_lattice(const DrinfeldModule& psi, const LatticeStep& step, int tau_bound, long t_precision,
                             long cutoff = -1);

struct Quotient {
    DrinfeldModule phi;
    Exponential exp;
    long tail_min_valuation = 0;  // least valuation among tau-coefficients above d
    int tail_checked = 0;         // number of such coefficients inspected
};

Quotient quotient_construct(const DrinfeldModule& psi, const LatticeStep& step, long t_precision);

// Y_{i+1} = Y_i / Lambda_i with rank-one lattices
struct Tower {
    std::vector<DrinfeldModule> modules;  // modules[0] is the base
    std::vector<Quotient> steps;
    std::vector<LatticeStep> specs;
    QVec s;                  // s_i^r = -v(lambda_i) for the combined orthonormal lattice basis
    long precision = 0;
    int base_rank = 1;
    const DrinfeldModule& top() const { return modules.back(); }
};

Tower iterate_quotient(const DrinfeldModule& base, const std::vector<LatticeStep>& specs, long t_precision);

// valuations of the nonzero roots of phi(N), with multiplicity, ascending
std::vector<Q> torsion_valuations(const DrinfeldModule& phi, const Poly& N, long t_cap = Laurent::kExact);

// -v(lambda_j) read off Newton polygons of E_{j-1}(z) - lambda_0 for the
// composite exponential of the earlier steps
QVec lattice_valuations_newton(const Tower& tw);

ClassPoint class_point(const Tower& tw);
ClassPoint class_point_N(const Tower& tw, int k);
// from the torsion valuations of phi(N)
ClassPoint class_point_N_newton(const Tower& tw, const Poly& N);

}  // namespace dtor
