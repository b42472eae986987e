#include "dtor/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace dtor {

bool Fq::is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;
    int e = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

const Fq& Fq::get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Fq>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return *it->second;
    if (!is_prime_power(q) || q > 256) throw std::invalid_argument("q must be a prime power <= 256");
    auto f = std::unique_ptr<Fq>(new Fq(q));
    const Fq& ref = *f;
    cache.emplace(q, std::move(f));
    return ref;
}

namespace {

std::vector<int> digits(int a, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// multiply by x modulo the monic polynomial f (coefficients f[0..e-1], x^e = -sum f_i x^i)
std::vector<int> times_x(const std::vector<int>& a, const std::vector<int>& f, int p) {
    int e = static_cast<int>(a.size());
    std::vector<int> r(e, 0);
    int top = a[e - 1];
    for (int i = e - 1; i >= 1; --i) r[i] = a[i - 1];
    r[0] = 0;
    for (int i = 0; i < e; ++i) r[i] = ((r[i] - top * f[i]) % p + p) % p;
    return r;
}

}  // namespace

Fq::Fq(int q) : q_(q) {
    is_prime_power(q, &p_, &e_);
    add_.assign(q * q, 0);
    neg_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p_, e_);
        std::vector<int> dn(e_);
        for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = undigits(dn, p_);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p_, e_);
            std::vector<int> ds(e_);
            for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = undigits(ds, p_);
        }
    }
    log_.assign(q, -1);
    exp_.assign(q - 1, 0);
    if (e_ == 1) {
        for (int g = 1; g < p_; ++g) {
            int x = 1, ord = 0;
            do {
                x = x * g % p_;
                ++ord;
            } while (x != 1);
            if (ord == p_ - 1) {
                x = 1;
                for (int i = 0; i < p_ - 1; ++i) {
                    exp_[i] = x;
                    log_[x] = i;
                    x = x * g % p_;
                }
                prim_ = {g};
                break;
            }
        }
        if (q == 2) {
            exp_[0] = 1;
            log_[1] = 0;
            prim_ = {1};
        }
        return;
    }
    // search a primitive monic polynomial of degree e: the powers of x must
    // run through all q-1 nonzero residues
    int total = 1;
    for (int i = 0; i < e_; ++i) total *= p_;
    for (int code = 0; code < total; ++code) {
        std::vector<int> f = digits(code, p_, e_);
        if (f[0] == 0) continue;
        std::vector<int> cur(e_, 0);
        cur[0] = 1;
        std::vector<int> lg(q, -1), ex(q - 1, 0);
        bool ok = true;
        for (int i = 0; i < q - 1; ++i) {
            int a = undigits(cur, p_);
            if (lg[a] != -1) {
                ok = false;
                break;
            }
            lg[a] = i;
            ex[i] = a;
            cur = times_x(cur, f, p_);
        }
        if (!ok || undigits(cur, p_) != 1) continue;
        log_ = lg;
        exp_ = ex;
        prim_ = f;
        return;
    }
    throw std::logic_error("no primitive polynomial found");
}

int Fq::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    int l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1 - l)];
}

int Fq::pow(int a, long n) const {
    if (n == 0) return 1;
    if (a == 0) {
        if (n < 0) throw std::domain_error("zero to negative power");
        return 0;
    }
    long m = q_ - 1;
    long l = (static_cast<long>(log_[a]) * (n % m)) % m;
    if (l < 0) l += m;
    return exp_[l];
}

int Fq::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

std::string Fq::str(int a) const { return std::to_string(a); }

}  // namespace dtor
