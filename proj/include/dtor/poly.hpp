#pragma once

#include <string>
#include <vector>

#include "dtor/field.hpp"
#include "dtor/rational.hpp"

namespace dtor {

// Element of F_q[X]. The variable name is only used for printing: T for the
// coefficient ring A, pi for the local field of the building.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Fq& F) : F_(&F) {}
    Poly(const Fq& F, std::vector<int> coeffs);

    static Poly constant(const Fq& F, int c);
    static Poly monomial(const Fq& F, int c, int deg);
    static Poly X(const Fq& F) { return monomial(F, 1, 1); }
    // "T^3+T+1", "2*T^2+1", "0"; coefficients are field element codes
    static Poly parse(const Fq& F, const std::string& s);

    const Fq& field() const { return *F_; }
    bool has_field() const { return F_ != nullptr; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    int lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<int>& coeffs() const { return c_; }
    // order of vanishing at X = 0; -1 for the zero polynomial
    int low_degree() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(int c) const;
    Poly shift(int k) const;
    void divmod(const Poly& d, Poly& quo, Poly& rem) const;
    Poly operator/(const Poly& d) const;
    Poly operator%(const Poly& d) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;
    Poly monic() const;

    std::string str(const std::string& var = "T") const;

private:
    void trim();
    const Fq* F_ = nullptr;
    std::vector<int> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);

// |a| = q^deg a, |0| = 0
Z abs_value(const Poly& a);

// All polynomials of degree exactly deg (deg = -1 gives {0}), in a fixed order.
std::vector<Poly> polys_of_degree(const Fq& F, int deg);
std::vector<Poly> polys_below_degree(const Fq& F, int bound);

}  // namespace dtor
