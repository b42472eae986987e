#include "dtor/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dtor {

namespace {

ZVec neg(const ZVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

bool is_zero_vec(const ZVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

ZVec combine(const Z& a, const ZVec& x, const Z& b, const ZVec& y) {
    ZVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return primitive(r);
}

std::vector<ZVec> sorted_unique(std::vector<ZVec> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<ZVec> project_all(const std::vector<ZVec>& vs, const std::vector<ZVec>& away) {
    QMat rows = to_qmat(away);
    std::vector<ZVec> out;
    for (const auto& v : vs) {
        ZVec p = primitive(project_out(to_q(v), rows));
        if (!is_zero_vec(p)) out.push_back(p);
    }
    return sorted_unique(out);
}

}  // namespace

void double_description(int n, const std::vector<ZVec>& ineqs, std::vector<ZVec>& rays, std::vector<ZVec>& lineality) {
    std::vector<ZVec> L;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        L.push_back(e);
    }
    std::vector<ZVec> R;
    std::vector<std::vector<char>> Zs;  // zero sets over processed constraints
    for (size_t c = 0; c < ineqs.size(); ++c) {
        const ZVec& a = ineqs[c];
        if (is_zero_vec(a)) {
            for (auto& z : Zs) z.push_back(1);
            continue;
        }
        int piv = -1;
        for (size_t i = 0; i < L.size(); ++i)
            if (dot(a, L[i]) != 0) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv >= 0) {
            ZVec l0 = L[piv];
            Z al0 = dot(a, l0);
            if (al0 < 0) {
                l0 = neg(l0);
                al0 = -al0;
            }
            std::vector<ZVec> L2;
            for (size_t i = 0; i < L.size(); ++i) {
                if (static_cast<int>(i) == piv) continue;
                Z al = dot(a, L[i]);
                L2.push_back(al == 0 ? L[i] : combine(al0, L[i], -al, l0));
            }
            for (size_t i = 0; i < R.size(); ++i) {
                Z ar = dot(a, R[i]);
                if (ar != 0) R[i] = combine(al0, R[i], -ar, l0);
                Zs[i].push_back(1);
            }
            std::vector<char> z0(c + 1, 1);
            z0[c] = 0;
            R.push_back(l0);
            Zs.push_back(z0);
            L = L2;
            continue;
        }
        std::vector<Z> val(R.size());
        for (size_t i = 0; i < R.size(); ++i) val[i] = dot(a, R[i]);
        std::vector<ZVec> R2;
        std::vector<std::vector<char>> Z2;
        for (size_t i = 0; i < R.size(); ++i) {
            if (val[i] >= 0) {
                R2.push_back(R[i]);
                auto z = Zs[i];
                z.push_back(val[i] == 0 ? 1 : 0);
                Z2.push_back(z);
            }
        }
        for (size_t p = 0; p < R.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t m = 0; m < R.size(); ++m) {
                if (val[m] >= 0) continue;
                std::vector<char> common(c, 0);
                for (size_t j = 0; j < c; ++j) common[j] = Zs[p][j] && Zs[m][j];
                bool adjacent = true;
                for (size_t o = 0; o < R.size() && adjacent; ++o) {
                    if (o == p || o == m) continue;
                    bool sup = true;
                    for (size_t j = 0; j < c && sup; ++j)
                        if (common[j] && !Zs[o][j]) sup = false;
                    if (sup) adjacent = false;
                }
                if (!adjacent) continue;
                ZVec v = combine(val[p], R[m], -val[m], R[p]);
                R2.push_back(v);
                common.push_back(1);
                Z2.push_back(common);
            }
        }
        R = std::move(R2);
        Zs = std::move(Z2);
    }
    rays = R;
    lineality = L;
}

void Cone::canonicalize(std::vector<ZVec> rays, std::vector<ZVec> lin) {
    // rays/lin: extreme rays and lineality generators of the cone
    lin_ = canonical_row_basis(to_qmat(lin), n_);
    rays_ = project_all(rays, lin_);
    // facets from the dual description
    std::vector<ZVec> cons = rays_;
    for (const auto& l : lin_) {
        cons.push_back(l);
        cons.push_back(neg(l));
    }
    std::vector<ZVec> drays, dlin;
    double_description(n_, cons, drays, dlin);
    eqs_ = canonical_row_basis(to_qmat(dlin), n_);
    facets_ = project_all(drays, eqs_);
}

Cone Cone::from_rays(int n, const std::vector<ZVec>& rays, const std::vector<ZVec>& lineality) {
    for (const auto& r : rays)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("ray dimension mismatch");
    std::vector<ZVec> cons;
    for (const auto& r : rays)
        if (!is_zero_vec(r)) cons.push_back(primitive(r));
    for (const auto& l : lineality) {
        cons.push_back(l);
        cons.push_back(neg(l));
    }
    // facets H, then extreme rays of {H >= 0}
    std::vector<ZVec> drays, dlin;
    double_description(n, cons, drays, dlin);
    std::vector<ZVec> h = drays;
    for (const auto& e : dlin) {
        h.push_back(e);
        h.push_back(neg(e));
    }
    Cone c;
    c.n_ = n;
    std::vector<ZVec> R, L;
    double_description(n, h, R, L);
    c.canonicalize(R, L);
    return c;
}

Cone Cone::from_rays_q(int n, const std::vector<QVec>& rays) {
    std::vector<ZVec> z;
    for (const auto& r : rays) z.push_back(primitive(r));
    return from_rays(n, z);
}

Cone Cone::from_ineqs(int n, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs) {
    std::vector<ZVec> h;
    for (const auto& a : ineqs) {
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("inequality dimension mismatch");
        h.push_back(primitive(a));
    }
    for (const auto& e : eqs) {
        h.push_back(primitive(e));
        h.push_back(neg(primitive(e)));
    }
    std::vector<ZVec> R, L;
    double_description(n, h, R, L);
    Cone c;
    c.n_ = n;
    c.canonicalize(R, L);
    return c;
}

Cone Cone::from_ineqs_q(int n, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
    std::vector<ZVec> a, e;
    for (const auto& x : ineqs) a.push_back(primitive(x));
    for (const auto& x : eqs) e.push_back(primitive(x));
    return from_ineqs(n, a, e);
}

Cone Cone::orthant(int n) {
    std::vector<ZVec> r;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        r.push_back(e);
    }
    return from_rays(n, r);
}

bool Cone::contains(const QVec& x) const {
    for (const auto& e : eqs_)
        if (dot(to_q(e), x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(to_q(f), x) < 0) return false;
    return true;
}

bool Cone::interior_contains(const QVec& x) const {
    for (const auto& e : eqs_)
        if (dot(to_q(e), x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(to_q(f), x) <= 0) return false;
    return true;
}

bool Cone::contains(const Cone& o) const {
    for (const auto& r : o.rays_)
        if (!contains(r)) return false;
    for (const auto& l : o.lin_)
        if (!contains(l) || !contains(neg(l))) return false;
    return true;
}

bool Cone::operator==(const Cone& o) const {
    return n_ == o.n_ && rays_ == o.rays_ && lin_ == o.lin_ && facets_ == o.facets_ && eqs_ == o.eqs_;
}

bool Cone::operator<(const Cone& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (dim() != o.dim()) return dim() < o.dim();
    if (rays_ != o.rays_) return rays_ < o.rays_;
    if (lin_ != o.lin_) return lin_ < o.lin_;
    return facets_ < o.facets_;
}

Cone Cone::dual() const {
    Cone d;
    d.n_ = n_;
    d.rays_ = facets_;
    d.lin_ = eqs_;
    d.facets_ = rays_;
    d.eqs_ = lin_;
    return d;
}

Cone Cone::intersect(const Cone& o) const {
    std::vector<ZVec> h = facets_, e = eqs_;
    h.insert(h.end(), o.facets_.begin(), o.facets_.end());
    e.insert(e.end(), o.eqs_.begin(), o.eqs_.end());
    return from_ineqs(n_, h, e);
}

std::vector<Cone> Cone::faces() const {
    size_t nr = rays_.size(), nf = facets_.size();
    std::vector<std::vector<char>> tight(nr, std::vector<char>(nf, 0));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nf; ++j) tight[i][j] = dot(rays_[i], facets_[j]) == 0;
    std::set<std::vector<char>> seen;
    std::vector<std::vector<char>> queue{std::vector<char>(nr, 1)};
    seen.insert(queue[0]);
    std::vector<Cone> out;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<char> cur = queue[qi];
        std::vector<ZVec> fr;
        for (size_t i = 0; i < nr; ++i)
            if (cur[i]) fr.push_back(rays_[i]);
        out.push_back(from_rays(n_, fr, lin_));
        for (size_t j = 0; j < nf; ++j) {
            std::vector<char> common(nf, 1);
            bool shrinks = false, empty = true;
            for (size_t i = 0; i < nr; ++i) {
                if (!cur[i]) continue;
                if (!tight[i][j]) {
                    shrinks = true;
                    continue;
                }
                empty = false;
                for (size_t k = 0; k < nf; ++k) common[k] = common[k] && tight[i][k];
            }
            if (!shrinks) continue;
            common[j] = 1;
            std::vector<char> closed(nr, 0);
            if (!empty)
                for (size_t i = 0; i < nr; ++i) {
                    bool all = true;
                    for (size_t k = 0; k < nf && all; ++k)
                        if (common[k] && !tight[i][k]) all = false;
                    closed[i] = all;
                }
            if (seen.insert(closed).second) queue.push_back(closed);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Cone::is_face_of(const Cone& o) const {
    if (n_ != o.n_ || !o.contains(*this)) return false;
    std::vector<ZVec> eq = o.eqs_;
    QVec p = interior_point();
    for (const auto& f : o.facets_)
        if (dot(to_q(f), p) == 0) eq.push_back(f);
    return from_ineqs(n_, o.facets_, eq) == *this;
}

QVec Cone::interior_point() const {
    QVec p(n_, 0);
    for (const auto& r : rays_)
        for (int i = 0; i < n_; ++i) p[i] += Q(r[i]);
    return p;
}

ZMat span_lattice_basis(const Cone& c) {
    int n = c.ambient();
    ZMat U1;
    int r1 = kernel_lattice(c.equations(), n, U1);
    ZMat BV(U1.begin() + r1, U1.end());  // columns spanning span(c) cap Z^n
    int v = static_cast<int>(BV.size());
    QMat linperp = nullspace(to_qmat(c.lineality()), n);
    ZMat M;
    for (const auto& row : linperp) {
        ZVec pr = primitive(row);
        ZVec m(v);
        for (int j = 0; j < v; ++j) m[j] = dot(pr, BV[j]);
        M.push_back(m);
    }
    ZMat U2;
    kernel_lattice(M, v, U2);
    ZMat out;
    for (int j = 0; j < v; ++j) {
        ZVec col(n, 0);
        for (int k = 0; k < v; ++k)
            if (U2[j][k] != 0)
                for (int i = 0; i < n; ++i) col[i] += U2[j][k] * BV[k][i];
        out.push_back(col);
    }
    return out;
}

namespace {

// coordinates of x (in span) with respect to basis columns B
QVec coords(const ZMat& B, const QVec& x) {
    size_t v = B.size();
    QMat G(v, QVec(v));
    QVec rhs(v);
    for (size_t i = 0; i < v; ++i) {
        rhs[i] = dot(to_q(B[i]), x);
        for (size_t j = 0; j < v; ++j) G[i][j] = Q(dot(B[i], B[j]));
    }
    return matvec(inverse(G), rhs);
}

std::vector<ZVec> pointed_hilbert(const Cone& k) {
    int m = k.ambient();
    if (m == 0 || k.rays().empty()) return {};
    auto tri = triangulate(k, k.rays());
    std::set<ZVec> cand(k.rays().begin(), k.rays().end());
    for (const auto& simplex : tri) {
        for (const auto& p : parallelepiped_points(simplex))
            if (!is_zero_vec(p)) cand.insert(p);
    }
    std::vector<ZVec> c(cand.begin(), cand.end());
    std::vector<ZVec> out;
    for (size_t i = 0; i < c.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < c.size() && !red; ++j) {
            if (i == j) continue;
            ZVec d(m);
            for (int t = 0; t < m; ++t) d[t] = c[i][t] - c[j][t];
            if (k.contains(d)) red = true;
        }
        if (!red) out.push_back(c[i]);
    }
    return out;
}

}  // namespace

bool Cone::is_regular() const {
    ZMat B = span_lattice_basis(*this);
    int v = static_cast<int>(B.size());
    int m = v - lineality_dim();
    if (static_cast<int>(rays_.size()) != m) return false;
    QMat M;
    for (const auto& r : rays_) {
        QVec y = coords(B, to_q(r));
        y.resize(m);
        M.push_back(to_q(primitive(y)));
    }
    if (m == 0) return true;
    Q d = det(M);
    return d == 1 || d == -1;
}

std::vector<ZVec> lattice_generators(const Cone& c) {
    int n = c.ambient();
    ZMat B = span_lattice_basis(c);
    int v = static_cast<int>(B.size());
    int m = v - c.lineality_dim();
    std::vector<ZVec> qrays;
    for (const auto& r : c.rays()) {
        QVec y = coords(B, to_q(r));
        y.resize(m);
        qrays.push_back(primitive(y));
    }
    std::vector<ZVec> out;
    if (m > 0) {
        Cone k = Cone::from_rays(m, qrays);
        for (const auto& h : pointed_hilbert(k)) {
            ZVec x(n, 0);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < n; ++i) x[i] += h[j] * B[j][i];
            out.push_back(x);
        }
    }
    for (int j = m; j < v; ++j) {
        out.push_back(B[j]);
        out.push_back(neg(B[j]));
    }
    return sorted_unique(out);
}

std::vector<ZVec> hilbert_basis(const Cone& sigma) {
    if (sigma.ambient() > 6) throw std::invalid_argument("hilbert basis above dimension 6");
    return lattice_generators(sigma.dual());
}

std::vector<std::vector<ZVec>> triangulate(const Cone& c, const std::vector<ZVec>& order) {
    if (!c.is_pointed()) throw std::invalid_argument("triangulation of a cone with lineality");
    int k = c.dim();
    if (k == 0) return {{}};
    if (static_cast<int>(c.rays().size()) == k) return {c.rays()};
    ZVec r0;
    bool found = false;
    for (const auto& r : order)
        if (std::find(c.rays().begin(), c.rays().end(), r) != c.rays().end()) {
            r0 = r;
            found = true;
            break;
        }
    if (!found) r0 = c.rays()[0];
    std::vector<std::vector<ZVec>> out;
    for (const auto& f : c.facets()) {
        if (dot(f, r0) == 0) continue;
        std::vector<ZVec> fr;
        for (const auto& r : c.rays())
            if (dot(f, r) == 0) fr.push_back(r);
        Cone face = Cone::from_rays(c.ambient(), fr);
        for (auto s : triangulate(face, order)) {
            s.push_back(r0);
            std::sort(s.begin(), s.end());
            out.push_back(s);
        }
    }
    return out;
}

Q truncated_volume(const Cone& c, const QVec& f) {
    if (!c.is_pointed()) throw std::invalid_argument("volume of a cone with lineality");
    int k = c.dim();
    if (k == 0) return 1;
    ZMat B = span_lattice_basis(c);
    Q fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    Q total = 0;
    for (const auto& s : triangulate(c, c.rays())) {
        QMat M;
        Q denom = fact;
        for (const auto& r : s) {
            M.push_back(coords(B, to_q(r)));
            Q fr = dot(f, to_q(r));
            if (fr <= 0) throw std::invalid_argument("functional not positive on the cone");
            denom *= fr;
        }
        Q d = det(M);
        if (d < 0) d = -d;
        total += d / denom;
    }
    return total;
}

std::string Cone::str() const {
    std::ostringstream o;
    auto list = [&](const std::vector<ZVec>& v) {
        o << "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) o << ",";
            o << "[";
            for (size_t j = 0; j < v[i].size(); ++j) o << (j ? "," : "") << v[i][j].get_str();
            o << "]";
        }
        o << "]";
    };
    o << "rays=";
    list(rays_);
    if (!lin_.empty()) {
        o << " lin=";
        list(lin_);
    }
    o << " ineqs=";
    list(facets_);
    if (!eqs_.empty()) {
        o << " eqs=";
        list(eqs_);
    }
    return o.str();
}

}  // namespace dtor
