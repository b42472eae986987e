#pragma once

#include <string>
#include <vector>

#include "dtor/poly.hpp"

namespace dtor {

// Element of F_q(X) in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const Poly& num);
    RatFunc(const Poly& num, const Poly& den);
    static RatFunc zero(const Fq& F) { return RatFunc(Poly(F)); }
    static RatFunc one(const Fq& F) { return RatFunc(Poly::constant(F, 1)); }
    // X^k for any integer k
    static RatFunc x_power(const Fq& F, int k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Fq& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    // order at X = 0; throws on zero
    int valuation() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "pi") const;

private:
    void normalize();
    Poly num_, den_;
};

using RMatrix = std::vector<std::vector<RatFunc>>;

// Gauss-Jordan over F_q(X); throws std::domain_error if singular.
RMatrix rf_inverse(const RMatrix& m);
RMatrix rf_mul(const RMatrix& a, const RMatrix& b);
std::vector<RatFunc> rf_apply(const RMatrix& m, const std::vector<RatFunc>& v);
int rf_rank(const RMatrix& m);

}  // namespace dtor
