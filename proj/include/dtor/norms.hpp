#pragma once

#include <string>
#include <vector>

#include "dtor/class_point.hpp"
#include "dtor/poly.hpp"

namespace dtor {

using PVec = std::vector<Poly>;
using PMat = std::vector<PVec>;  // rows are vectors

// mu(sum x_i e_i) = max_i s_i |x_i|
struct WeightedNorm {
    long q = 2;
    QVec weights;
    int n() const { return static_cast<int>(weights.size()); }
};

Q norm_eval(const WeightedNorm& mu, const PVec& x);

// true iff mu(sum x_i v_i) = max |x_i| mu(v_i) for all x in F_inf^n
bool is_orthonormal(const WeightedNorm& mu, const PMat& rows);

Poly poly_det(const PMat& m);

// Rows of an A-basis of the lattice spanned by the rows of gens, reduced to be
// orthonormal and sorted by norm.
PMat reduce_basis(const WeightedNorm& mu, const PMat& gens);

struct Minima {
    PMat basis;     // lambda_1..lambda_n as rows in the reference basis
    QVec profile;   // mu(lambda_i)
};
// lambda_i of least norm outside the span of lambda_1..lambda_{i-1}; ties go
// to the row that is least under the degree-then-coefficient order.
Minima successive_minima(const WeightedNorm& mu, const PMat& gens);

// rows form an A-basis of span(gens), have weakly increasing norms and are orthonormal
bool satisfies_minima_conditions(const WeightedNorm& mu, const PMat& gens, const PMat& rows, std::string* why = nullptr);

// lambda'_i = sum_j a_ij lambda_j against a base satisfying the conditions
bool basis_change_check(const WeightedNorm& mu, const PMat& base, const PMat& a, std::string* why = nullptr);

// class of (0^{r-1}, profile) in C_{r+n}, canonical projective representative
ClassPoint norm_class(const QVec& profile, int r);

PMat identity_pmat(const Fq& F, int n);
PMat pmat_mul(const PMat& a, const PMat& b);

}  // namespace dtor
