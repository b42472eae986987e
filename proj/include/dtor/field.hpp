#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtor {

// The field with q elements. Elements are ints in [0, q): for q = p^e an
// element is the base-p digit string of its coordinates in F_p[x]/(f) with f
// a primitive polynomial found at construction.
class Fq {
public:
    static const Fq& get(int q);
    static bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long n) const;
    int from_int(long n) const;
    int generator() const { return exp_.size() > 1 ? exp_[1] : 1; }
    const std::vector<int>& primitive_poly() const { return prim_; }

    std::string str(int a) const;

private:
    explicit Fq(int q);
    int q_, p_, e_;
    std::vector<int> prim_;
    std::vector<int> add_, neg_, log_, exp_;
};

}  // namespace dtor
