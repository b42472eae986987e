#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtor/field.hpp"
#include "dtor/poly.hpp"

namespace dtor {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Laurent series over F_q in t: known modulo t^prec. Exact elements
// carry prec = kExact and finitely many terms.
class Laurent {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 8;

    Laurent() = default;
    static Laurent zero(const Fq& F, long prec = kExact);
    static Laurent monomial(const Fq& F, int c, long e);
    static Laurent one(const Fq& F) { return monomial(F, 1, 0); }
    static Laurent from_coeffs(const Fq& F, long v, std::vector<int> c, long prec = kExact);
    static Laurent from_poly(const Poly& p, long prec = kExact);

    const Fq& field() const { return *F_; }
    bool has_field() const { return F_ != nullptr; }
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return prec_ >= kExact; }
    long valuation() const { return v_; }
    long precision() const { return prec_; }
    long rel_precision() const { return is_exact() ? kExact : prec_ - v_; }
    int coeff(long e) const;
    int lead() const { return c_.empty() ? 0 : c_[0]; }
    const std::vector<int>& window() const { return c_; }
    bool is_unit() const { return !is_zero() && v_ == 0; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    // rel_prec is used only for exact elements that are not monomials
    Laurent inv(long rel_prec = -1) const;
    Laurent pow(long n, long rel_prec = -1) const;
    // x^(q^i); terms at exponents >= cap are dropped and the precision lowered to cap
    Laurent frobenius(int i, long cap = kExact) const;
    Laurent truncate(long P) const;
    Laurent scale(int c) const;
    Laurent shift(long k) const;

    // difference vanishes to the common precision
    bool agrees(const Laurent& o) const { return (*this - o).is_zero(); }

    std::string text() const;

private:
    Laurent(const Fq& F, long v, std::vector<int> c, long prec);
    void normalize();
    const Fq* F_ = nullptr;
    long v_ = kExact;
    std::vector<int> c_;
    long prec_ = kExact;
};

long sat_add(long a, long b);

}  // namespace dtor
