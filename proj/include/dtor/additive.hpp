#pragma once

#include <string>
#include <vector>

#include "dtor/laurent.hpp"

namespace dtor {

// sum_i c_i tau^i with tau(z) = z^q. terms() holds c_0..c_bound. A polynomial
// has every coefficient above bound exactly zero; otherwise coefficients above
// bound are unknown (the series was truncated in tau-degree).
class AddSeries {
public:
    AddSeries() = default;
    AddSeries(const Fq& F, std::vector<Laurent> c, bool polynomial);
    static AddSeries identity(const Fq& F);
    static AddSeries scalar(const Laurent& c);
    // z -> sum c_i z^(q^i) from a list of coefficients, polynomial
    static AddSeries poly(const Fq& F, std::vector<Laurent> c) { return AddSeries(F, std::move(c), true); }

    const Fq& field() const { return *F_; }
    bool is_polynomial() const { return poly_; }
    int bound() const { return static_cast<int>(c_.size()) - 1; }
    // highest index with a coefficient that is nonzero to precision; -1 if none
    int degree() const;
    const Laurent& coeff(int i) const;
    Laurent coeff_or_zero(int i) const;
    const std::vector<Laurent>& terms() const { return c_; }

    AddSeries operator+(const AddSeries& o) const;
    AddSeries operator-(const AddSeries& o) const;
    AddSeries operator-() const;
    AddSeries scale(const Laurent& c) const;
    // keep tau-degrees <= M (marking the result a truncated series unless it already was shorter)
    AddSeries truncate_tau(int M) const;
    AddSeries truncate_t(long P) const;
    // drop trailing coefficients that vanish to precision and declare polynomial of that degree
    AddSeries as_polynomial(int deg) const;

    Laurent eval(const Laurent& z) const;
    // points (q^i, c_i) of the z-expansion
    std::vector<std::pair<long, Laurent>> z_terms() const;

    std::string text() const;

private:
    const Fq* F_ = nullptr;
    std::vector<Laurent> c_;
    bool poly_ = true;
};

// (f o g)(z) = f(g(z)); tau-degree capped at tau_cap and t-precision at t_cap
AddSeries skew_compose(const AddSeries& f, const AddSeries& g, int tau_cap = 1 << 20, long t_cap = Laurent::kExact);

// Right inverse g with e o g = z, to tau-degree M. Requires an invertible tau^0 coefficient.
AddSeries compositional_inverse(const AddSeries& e, int M, long t_cap = Laurent::kExact);

}  // namespace dtor
