#pragma once

#include <string>
#include <vector>

#include "dtor/cone.hpp"
#include "dtor/ratfunc.hpp"

namespace dtor {

// An O_E-lattice in E^n, E = F_q((pi)), given either as the diagonal lattice
// sum_i m^{a(i)} e_i or by a basis (columns of a matrix over F_q(pi)).
class Lattice {
public:
    Lattice() = default;
    static Lattice diagonal(std::vector<long> a);
    static Lattice from_basis(RMatrix cols);

    int n() const;
    bool is_diagonal() const { return diag_; }
    const std::vector<long>& exponents() const { return a_; }
    RMatrix basis(const Fq& F) const;
    // pi^t L
    Lattice scaled(long t) const;

    std::string str() const;

private:
    bool diag_ = true;
    std::vector<long> a_;
    RMatrix b_;
};

using Simplex = std::vector<Lattice>;

// exponent e with mu_L(x) = q^e; throws on x = 0
long lattice_norm_exp(const Fq& F, const Lattice& L, const std::vector<RatFunc>& x);
Q lattice_norm(const Fq& F, const Lattice& L, const std::vector<RatFunc>& x);

// largest t with L' in pi^t L
long containment_level(const Fq& F, const Lattice& L, const Lattice& Lp);
bool same_class(const Fq& F, const Lattice& L, const Lattice& Lp);
// diagonal classes normalised to min exponent 0
std::vector<long> diagonal_class(const Lattice& L);

struct ChainResult {
    bool simplex = false;
    // representatives L^0 > L^1 > ... > L^r > pi L^0, when simplex
    std::vector<Lattice> chain;
    // when not a simplex and some offending pair is diagonal: mu(x) < mu(y) on
    // one class and mu(x) > mu(y) on another
    std::vector<RatFunc> x, y;
};
ChainResult chain_test(const Fq& F, const Simplex& S);

// mu(x) and mu(y) compare in opposite ways at two members of S
bool violates_c(const Fq& F, const Simplex& S, const std::vector<RatFunc>& x, const std::vector<RatFunc>& y);

// sigma(S), generated by s(L) = (q^{a(i)}); sigma_r(S) by the r-th powers
Cone simplex_cone(long q, const Simplex& S);
Cone simplex_cone_r(long q, int r, const Simplex& S);
QVec lattice_weights(long q, const Lattice& L, int r = 1);

// the weight vector of mu_s lies in sigma(S)
bool realization_membership(long q, const Simplex& S, const QVec& weights);

struct IntersectionCheck {
    bool empty = false;
    bool holds = false;
    Cone lhs, rhs;  // sigma(S) cap sigma(S'), sigma(S cap S')
};
IntersectionCheck intersection_property_check(long q, const Simplex& S, const Simplex& Sp);

// L^i = m e_1 + ... with exponents (0^{n-i}, 1^i), 0 <= i < n
Simplex standard_simplex(int n);
// the edge {(0, h-1), (0, h)} of AP_2
Simplex ap2_edge(int h);

}  // namespace dtor
