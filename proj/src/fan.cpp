#include "dtor/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtor {

Fan::Fan(int n, const std::vector<Cone>& cones) : n_(n) {
    std::set<Cone> all;
    for (const auto& c : cones) {
        if (c.ambient() != n) throw std::invalid_argument("fan cone dimension mismatch");
        if (all.count(c)) continue;
        for (const auto& f : c.faces()) all.insert(f);
    }
    cones_.assign(all.begin(), all.end());
}

std::vector<Cone> Fan::maximal() const {
    std::vector<Cone> out;
    for (const auto& c : cones_) {
        bool max = true;
        for (const auto& o : cones_)
            if (o.dim() > c.dim() && o.contains(c)) {
                max = false;
                break;
            }
        if (max) out.push_back(c);
    }
    return out;
}

bool Fan::contains(const Cone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

const Cone* Fan::locate(const QVec& x) const {
    for (const auto& c : cones_)
        if (c.interior_contains(x)) return &c;
    return nullptr;
}

bool fan_validate(const Fan& f, std::string* why) {
    for (const auto& c : f.cones())
        for (const auto& face : c.faces())
            if (!f.contains(face)) {
                if (why) *why = "missing face of " + c.str();
                return false;
            }
    auto mx = f.maximal();
    for (size_t i = 0; i < mx.size(); ++i)
        for (size_t j = i + 1; j < mx.size(); ++j) {
            Cone x = mx[i].intersect(mx[j]);
            if (!x.is_face_of(mx[i]) || !x.is_face_of(mx[j])) {
                if (why) *why = "bad intersection of " + mx[i].str() + " and " + mx[j].str();
                return false;
            }
        }
    return true;
}

namespace {

QVec positive_functional(const Cone& c) {
    QVec f(c.ambient(), 0);
    for (const auto& a : c.facets())
        for (int i = 0; i < c.ambient(); ++i) f[i] += Q(a[i]);
    return f;
}

}  // namespace

bool is_subdivision(const Fan& fine, const Fan& coarse) {
    if (fine.ambient() != coarse.ambient()) return false;
    for (const auto& c : fine.cones()) {
        bool inside = false;
        for (const auto& d : coarse.cones())
            if (d.contains(c)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    for (const auto& s : coarse.maximal()) {
        QVec f = positive_functional(s);
        Q want = truncated_volume(s, f), got = 0;
        for (const auto& t : fine.cones())
            if (t.dim() == s.dim() && s.contains(t)) got += truncated_volume(t, f);
        if (got != want) return false;
    }
    return true;
}

Fan join(const Fan& a, const Fan& b) {
    std::vector<Cone> out;
    for (const auto& x : a.maximal())
        for (const auto& y : b.maximal()) out.push_back(x.intersect(y));
    return Fan(a.ambient(), out);
}

namespace {

bool simplex_regular(int n, const std::vector<ZVec>& rays) { return Cone::from_rays(n, rays).is_regular(); }

// a nonzero lattice point of the half-open parallelepiped of a simplicial cone
ZVec interior_lattice_point(int n, const std::vector<ZVec>& rays) {
    Cone c = Cone::from_rays(n, rays);
    ZMat B = span_lattice_basis(c);
    size_t k = rays.size();
    QMat G(k, QVec(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) G[i][j] = Q(dot(B[i], B[j]));
    QMat Gi = inverse(G);
    ZMat cols;
    for (const auto& r : rays) {
        QVec rhs(k);
        for (size_t i = 0; i < k; ++i) rhs[i] = Q(dot(B[i], r));
        QVec y = matvec(Gi, rhs);
        ZVec zy(k);
        for (size_t i = 0; i < k; ++i) zy[i] = y[i].get_num();
        cols.push_back(zy);
    }
    std::vector<ZVec> pts = parallelepiped_points(cols);
    std::vector<ZVec> cand;
    for (const auto& p : pts) {
        bool zero = std::all_of(p.begin(), p.end(), [](const Z& x) { return x == 0; });
        if (zero) continue;
        ZVec x(n, 0);
        for (size_t j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) x[i] += p[j] * B[j][i];
        cand.push_back(primitive(x));
    }
    if (cand.empty()) throw std::logic_error("no interior lattice point in a non-regular cone");
    std::sort(cand.begin(), cand.end());
    return cand[0];
}

// coefficients of v in the ray basis of a simplicial cone
QVec ray_coords(const std::vector<ZVec>& rays, const ZVec& v) {
    size_t k = rays.size(), n = v.size();
    QMat A(n, QVec(k));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) A[i][j] = Q(rays[j][i]);
    QMat At = transpose(A);
    QMat G = matmul(At, A);
    return matvec(matmul(inverse(G), At), to_q(v));
}

}  // namespace

Fan regular_refine(const Fan& f) {
    int n = f.ambient();
    if (n > 4) throw std::invalid_argument("regular refinement above dimension 4");
    std::set<ZVec> all_rays;
    for (const auto& c : f.cones()) {
        if (!c.is_pointed()) throw std::invalid_argument("regular refinement of a non-pointed fan");
        all_rays.insert(c.rays().begin(), c.rays().end());
    }
    std::vector<ZVec> order(all_rays.begin(), all_rays.end());
    std::vector<std::vector<ZVec>> simp;
    for (const auto& c : f.maximal())
        for (auto s : triangulate(c, order)) simp.push_back(s);
    for (int guard = 0; guard < 100000; ++guard) {
        int bad = -1;
        for (size_t i = 0; i < simp.size(); ++i)
            if (!simplex_regular(n, simp[i])) {
                bad = static_cast<int>(i);
                break;
            }
        if (bad < 0) break;
        ZVec v = interior_lattice_point(n, simp[bad]);
        std::vector<std::vector<ZVec>> next;
        for (const auto& s : simp) {
            if (!Cone::from_rays(n, s).contains(v)) {
                next.push_back(s);
                continue;
            }
            QVec c = ray_coords(s, v);
            for (size_t i = 0; i < s.size(); ++i) {
                if (c[i] <= 0) continue;
                std::vector<ZVec> t = s;
                t[i] = v;
                std::sort(t.begin(), t.end());
                next.push_back(t);
            }
        }
        simp = std::move(next);
    }
    std::vector<Cone> cones;
    for (const auto& s : simp) cones.push_back(Cone::from_rays(n, s));
    return Fan(n, cones);
}

}  // namespace dtor
