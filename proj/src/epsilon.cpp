#include "dtor/epsilon.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dtor {

namespace {

Q ratio(long q, int r) { return Q(q - 1) / (qpow_int(q, r + 1) - 1); }

bool is_sorted_q(const QVec& s) { return std::is_sorted(s.begin(), s.end()); }

// composite of the n = 1 hat maps; returns false if some s'_i <= 0
bool hat_chain(long q, int r, const QVec& sorted, QVec& sp) {
    sp.clear();
    for (size_t i = 0; i < sorted.size(); ++i) {
        Q v = sorted[i];
        for (size_t j = 0; j < i; ++j) v = eps1_hat_closed(q, r + static_cast<int>(j), sp[j], v);
        if (v <= 0) return false;
        sp.push_back(v);
    }
    return true;
}

Q apply_chain(long q, int r, const QVec& sp, Q x) {
    for (size_t j = 0; j < sp.size(); ++j) x = eps1_hat_closed(q, r + static_cast<int>(j), sp[j], x);
    return x;
}

Q delta_from_chain(long q, int r, const QVec& sp) {
    Q d = 0;
    for (size_t i = 0; i < sp.size(); ++i) {
        long e = r + static_cast<long>(i) + 1;
        d += Q(q - 1) / (qpow_int(q, e) - 1) * sp[i];
    }
    return d;
}

}  // namespace

Q eps_oracle(long q, int r, const QVec& s, const Q& x) {
    for (const auto& v : s)
        if (v <= 0) throw std::invalid_argument("eps: s must be positive");
    if (x <= 0) return x;
    Q total = 0;
    Q qr = qpow_int(q, r);
    std::function<void(size_t, const Q&, const Z&)> rec = [&](size_t i, const Q& mx, const Z& w) {
        if (i == s.size()) {
            if (mx < x) total += Q(w) * (x - mx);
            return;
        }
        rec(i + 1, mx, w);
        Q val = s[i];
        Z wt = q - 1;
        while (val < x) {
            rec(i + 1, std::max(mx, val), w * wt);
            val *= qr;
            wt *= q;
        }
    };
    rec(0, Q(0), Z(1));
    return total;
}

Q eps1_closed(long q, int r, const Q& s, const Q& x) {
    long h = ceil_log_ratio(x, s, q, r);
    return qpow_int(q, h) * x - (qpow_int(q, h * (r + 1)) - 1) * ratio(q, r) * s;
}

Q eps1_hat_closed(long q, int r, const Q& s, const Q& x) {
    long h = ceil_log_ratio(x, s, q, r);
    return qpow_int(q, h) * x - qpow_int(q, h * (r + 1)) * ratio(q, r) * s;
}

ClosedValue eps_hat_closed(long q, int r, const QVec& s, const Q& x) {
    QVec sorted = s, sp;
    std::sort(sorted.begin(), sorted.end());
    if (!hat_chain(q, r, sorted, sp)) return {eps_hat_oracle(q, r, s, x), true};
    Q v = apply_chain(q, r, sp, x);
    if (!is_sorted_q(s)) v += delta_from_chain(q, r, sp) - delta(q, r, s);
    return {v, false};
}

ClosedValue eps_closed(long q, int r, const QVec& s, const Q& x) {
    QVec sorted = s, sp;
    std::sort(sorted.begin(), sorted.end());
    if (!hat_chain(q, r, sorted, sp)) return {eps_oracle(q, r, s, x), true};
    return {apply_chain(q, r, sp, x) + delta_from_chain(q, r, sp), false};
}

Q eps(long q, int r, const QVec& s, const Q& x) { return eps_closed(q, r, s, x).value; }

Q delta(long q, int r, const QVec& s) {
    long n = static_cast<long>(s.size());
    if (n == 0) return 0;
    Q sum = 0;
    for (long i = 1; i <= n; ++i) {
        QVec pre(s.begin(), s.begin() + (i - 1));
        sum += qpow_int(q, n - i) * eps(q, r, pre, s[i - 1]);
    }
    return Q(q - 1) / (qpow_int(q, r + n) - 1) * sum;
}

Q delta_oracle(long q, int r, const QVec& s) {
    long n = static_cast<long>(s.size());
    if (n == 0) return 0;
    Q sum = 0;
    for (long i = 1; i <= n; ++i) {
        QVec pre(s.begin(), s.begin() + (i - 1));
        sum += qpow_int(q, n - i) * eps_oracle(q, r, pre, s[i - 1]);
    }
    return Q(q - 1) / (qpow_int(q, r + n) - 1) * sum;
}

Q eps_hat(long q, int r, const QVec& s, const Q& x) { return eps(q, r, s, x) - delta(q, r, s); }

Q eps_hat_oracle(long q, int r, const QVec& s, const Q& x) { return eps_oracle(q, r, s, x) - delta_oracle(q, r, s); }

Q eps_inverse(long q, int r, const QVec& s, const Q& y) {
    if (s.empty()) return y;
    Q lo = *std::min_element(s.begin(), s.end());
    if (y <= lo) return y;
    Q qr = qpow_int(q, r);
    Q top = *std::max_element(s.begin(), s.end());
    while (eps(q, r, s, top) < y) top *= qr;
    QVec br;
    for (const auto& v : s)
        for (Q b = v; b <= top; b *= qr) br.push_back(b);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    Q a = br[0], ea = eps(q, r, s, a);
    for (size_t i = 1; i < br.size(); ++i) {
        Q b = br[i], eb = eps(q, r, s, b);
        if (eb >= y) return a + (y - ea) * (b - a) / (eb - ea);
        a = b;
        ea = eb;
    }
    throw std::logic_error("eps_inverse: bracket not found");
}

}  // namespace dtor
