#include "dtor/xi.hpp"

#include <stdexcept>

#include "dtor/epsilon.hpp"
#include "dtor/rng.hpp"

namespace dtor {

int stratum(const QVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i) + 1;
    return static_cast<int>(v.size()) + 1;
}

QVec plain_to_powers(const QVec& s) {
    int r = stratum(s);
    QVec p = s;
    for (auto& x : p) x = qpow(x, r);
    return p;
}

bool in_chamber(const QVec& v) {
    if (!v.empty() && v[0] < 0) return false;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

QVec xi_eval(long q, int k, const QVec& p) {
    if (!in_chamber(p)) throw std::invalid_argument("xi: point outside C_d");
    int r = stratum(p), n = static_cast<int>(p.size());
    QVec out(n, 0);
    if (r > n) return out;
    QVec P(p.begin() + (r - 1), p.end());
    Q scale = qpow_int(q, -static_cast<long>(k) * r);
    for (int i = r - 1; i < n; ++i) out[i] = eps(q, r, P, scale * p[i]);
    return out;
}

QVec xi_inverse(long q, int k, const QVec& y) {
    if (!in_chamber(y)) throw std::invalid_argument("xi inverse: point outside C_d");
    int r = stratum(y), n = static_cast<int>(y.size());
    QVec p(n, 0);
    if (r > n) return p;
    Q scale = qpow_int(q, static_cast<long>(k) * r);
    QVec pre;
    for (int i = r - 1; i < n; ++i) {
        p[i] = scale * eps_inverse(q, r, pre, y[i]);
        pre.push_back(p[i]);
    }
    return p;
}

QVec xi_transfer(long q, int k, int kp, const QVec& plain) { return xi_eval(q, kp, xi_inverse(q, k, plain)); }

std::vector<int> theta(long q, int k, const Cone& sigma) {
    int n = sigma.ambient();
    Q f = qpow_int(q, k - 1);
    std::vector<int> th(n);
    for (int i = 1; i <= n; ++i) {
        th[i - 1] = i;
        for (int j = 1; j <= i; ++j) {
            bool ok = true;
            for (const auto& ray : sigma.rays())
                if (f * Q(ray[j - 1]) < Q(ray[i - 1])) {
                    ok = false;
                    break;
                }
            if (ok) {
                th[i - 1] = j;
                break;
            }
        }
    }
    return th;
}

QVec pi_eval(long q, const std::vector<int>& th, const QVec& p) {
    int r = stratum(p), n = static_cast<int>(p.size());
    QVec out(n, 0);
    for (int i = r; i <= n; ++i) {
        QVec b;
        for (int j = r; j < th[i - 1]; ++j) b.push_back(p[j - 1]);
        out[i - 1] = eps_hat(q, r, b, p[i - 1]);
    }
    return out;
}

Cone pi_image(long q, int k, const Cone& sigma) {
    auto th = theta(q, k, sigma);
    std::vector<QVec> rays;
    for (const auto& ray : sigma.rays()) rays.push_back(pi_eval(q, th, plain_to_powers(to_q(ray))));
    return Cone::from_rays_q(sigma.ambient(), rays);
}

Cone xi_image(long q, int k, const Cone& sigma) {
    std::vector<QVec> rays;
    for (const auto& ray : sigma.rays()) rays.push_back(xi_eval(q, k, plain_to_powers(to_q(ray))));
    return Cone::from_rays_q(sigma.ambient(), rays);
}

std::vector<Comparison> comparisons(int d, int k) {
    std::vector<Comparison> cs{{-1, 1, 1}};
    for (int i = 2; i <= d - 1; ++i)
        for (int j = 1; j < i; ++j)
            for (int h = 0; h < k; ++h) cs.push_back({h, i, j});
    return cs;
}

namespace {

int sgn(const Q& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

std::vector<int> comparison_signs(long q, const std::vector<Comparison>& cs, const QVec& p) {
    long r = stratum(p);
    std::vector<int> out;
    for (const auto& c : cs) {
        if (c.h < 0)
            out.push_back(sgn(p[0]));
        else
            out.push_back(sgn(qpow_int(q, c.h * r) * p[c.j - 1] - p[c.i - 1]));
    }
    return out;
}

bool SourceFan::contains_powers(size_t idx, const QVec& p) const {
    auto v = comparison_signs(q, comps, p);
    const auto& s = signs.at(idx);
    for (size_t c = 0; c < v.size(); ++c) {
        if (s[c] == 0 && v[c] != 0) return false;
        if (s[c] > 0 && v[c] < 0) return false;
        if (s[c] < 0 && v[c] > 0) return false;
    }
    return true;
}

SourceFan sigma_upper(long q, int d, int k) {
    if (d < 2 || k < 1) throw std::invalid_argument("sigma_upper: need d >= 2, k >= 1");
    int n = d - 1;
    std::vector<ZVec> ineqs;
    ZVec e(n, 0);
    e[0] = 1;
    ineqs.push_back(e);
    for (int i = 1; i < n; ++i) {
        ZVec a(n, 0);
        a[i] = 1;
        a[i - 1] = -1;
        ineqs.push_back(a);
    }
    std::vector<Cone> cells{Cone::from_ineqs(n, ineqs)};
    SourceFan sf;
    sf.q = q;
    sf.d = d;
    sf.k = k;
    sf.comps = comparisons(d, k);
    for (const auto& c : sf.comps) {
        if (c.h <= 0) continue;
        ZVec a(n, 0);
        a[c.j - 1] = zpow(q, c.h);
        a[c.i - 1] = -1;
        std::vector<Cone> next;
        for (const auto& cell : cells) {
            bool pos = false, neg = false;
            for (const auto& ray : cell.rays()) {
                Z v = dot(a, ray);
                pos = pos || v > 0;
                neg = neg || v < 0;
            }
            if (!(pos && neg)) {
                next.push_back(cell);
                continue;
            }
            ZVec na = a;
            for (auto& x : na) x = -x;
            auto up = cell.facets(), dn = cell.facets();
            up.push_back(a);
            dn.push_back(na);
            next.push_back(Cone::from_ineqs(n, up));
            next.push_back(Cone::from_ineqs(n, dn));
        }
        cells = std::move(next);
    }
    sf.fan = Fan(n, cells);
    for (const auto& c : sf.fan.cones()) sf.signs.push_back(comparison_signs(q, sf.comps, plain_to_powers(c.interior_point())));
    return sf;
}

namespace {

ImageFan images_of(long q, int k, int kp, const SourceFan& src) {
    ImageFan f;
    f.q = q;
    f.d = src.d;
    f.k = k;
    f.kp = kp;
    for (const auto& c : src.fan.cones()) {
        f.source.push_back(c);
        f.image.push_back(xi_image(q, k, c));
    }
    f.fan = Fan(src.d - 1, f.image);
    return f;
}

}  // namespace

ImageFan sigma_k(long q, int d, int k) { return images_of(q, k, k, sigma_upper(q, d, k)); }

ImageFan sigma_kk(long q, int d, int k, int kp) {
    if (kp < k) throw std::invalid_argument("sigma_kk: need k <= k'");
    return images_of(q, k, kp, sigma_upper(q, d, kp));
}

std::vector<QVec> interior_samples(const Cone& c, int count, std::uint64_t seed) {
    Rng g(seed, "interior");
    std::vector<QVec> out;
    for (int t = 0; t < count; ++t) {
        QVec x(c.ambient(), 0);
        for (const auto& ray : c.rays()) {
            long w = g.uniform(1, 9);
            for (int i = 0; i < c.ambient(); ++i) x[i] += Q(w) * Q(ray[i]);
        }
        out.push_back(x);
    }
    return out;
}

namespace {

template <class Src, class Tgt>
Linearization fit_and_certify(const Cone& sigma, std::uint64_t seed, Src source, Tgt target) {
    int n = sigma.ambient(), m = sigma.dim();
    Linearization out;
    out.l.assign(n, QVec(n, 0));
    if (m == 0) {
        out.certified = true;
        return out;
    }
    QMat X, Y;
    auto cand = interior_samples(sigma, 8 * m + 8, seed);
    for (const auto& s : cand) {
        if (static_cast<int>(X.size()) == m) break;
        QVec p = plain_to_powers(s), x = source(p);
        QMat trial = X;
        trial.push_back(x);
        if (rank(trial) == static_cast<int>(trial.size())) {
            X.push_back(x);
            Y.push_back(target(p));
        }
    }
    if (static_cast<int>(X.size()) < m) {
        out.detail = "no independent sample set";
        return out;
    }
    // rows of X and Y are samples; L = Y^T (X X^T)^{-1} X
    QMat G = matmul(X, transpose(X));
    out.l = matmul(matmul(transpose(Y), inverse(G)), X);
    std::vector<QVec> checks;
    for (const auto& ray : sigma.rays()) checks.push_back(to_q(ray));
    for (const auto& s : interior_samples(sigma, 5, seed ^ 0x5a5a5a5aULL)) checks.push_back(s);
    out.certified = true;
    for (const auto& s : checks) {
        QVec p = plain_to_powers(s);
        if (matvec(out.l, source(p)) != target(p)) {
            out.certified = false;
            out.detail = "mismatch at " + join(s);
            break;
        }
    }
    return out;
}

}  // namespace

Linearization linearize_xi(long q, int k, int kp, const Cone& sigma, std::uint64_t seed) {
    auto th = theta(q, k, sigma);
    return fit_and_certify(
        sigma, seed, [&](const QVec& p) { return pi_eval(q, th, p); }, [&](const QVec& p) { return xi_eval(q, kp, p); });
}

Linearization linearize_transfer(long q, int k, int kp, const Cone& sigma, std::uint64_t seed) {
    return fit_and_certify(
        sigma, seed, [&](const QVec& p) { return xi_eval(q, k, p); }, [&](const QVec& p) { return xi_eval(q, kp, p); });
}

}  // namespace dtor
