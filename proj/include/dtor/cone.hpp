#pragma once

#include <string>
#include <vector>

#include "dtor/linalg.hpp"

namespace dtor {

// Finitely generated rational cone in Q^n, kept in a canonical form:
//   rays       extreme rays modulo the lineality space, projected onto its
//              orthogonal complement, primitive, sorted
//   lineality  canonical basis of the lineality space
//   facets     irredundant inequalities a.x >= 0, projected onto span(C), primitive, sorted
//   equations  canonical basis of span(C)^perp
// Two cones are equal iff these four lists are equal.
class Cone {
public:
    Cone() = default;
    static Cone from_rays(int n, const std::vector<ZVec>& rays, const std::vector<ZVec>& lineality = {});
    static Cone from_rays_q(int n, const std::vector<QVec>& rays);
    static Cone from_ineqs(int n, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs = {});
    static Cone from_ineqs_q(int n, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs = {});
    static Cone orthant(int n);
    static Cone zero(int n) { return from_rays(n, {}); }

    int ambient() const { return n_; }
    int dim() const { return n_ - static_cast<int>(eqs_.size()); }
    int lineality_dim() const { return static_cast<int>(lin_.size()); }
    bool is_pointed() const { return lin_.empty(); }
    const std::vector<ZVec>& rays() const { return rays_; }
    const std::vector<ZVec>& lineality() const { return lin_; }
    const std::vector<ZVec>& facets() const { return facets_; }
    const std::vector<ZVec>& equations() const { return eqs_; }

    bool contains(const QVec& x) const;
    bool contains(const ZVec& x) const { return contains(to_q(x)); }
    bool contains(const Cone& o) const;
    bool interior_contains(const QVec& x) const;  // relative interior
    bool operator==(const Cone& o) const;
    bool operator!=(const Cone& o) const { return !(*this == o); }
    bool operator<(const Cone& o) const;

    Cone dual() const;
    Cone intersect(const Cone& o) const;
    // all faces, including the cone itself and the minimal face
    std::vector<Cone> faces() const;
    bool is_face_of(const Cone& o) const;
    bool is_simplicial() const { return is_pointed() && static_cast<int>(rays_.size()) == dim(); }
    // simplicial with primitive rays extending to a basis of span cap Z^n
    bool is_regular() const;
    // a rational point in the relative interior
    QVec interior_point() const;

    std::string str() const;

private:
    void canonicalize(std::vector<ZVec> rays, std::vector<ZVec> lin);
    int n_ = 0;
    std::vector<ZVec> rays_, lin_, facets_, eqs_;
};

// Double description: generators of {x : a.x >= 0 for a in ineqs}.
void double_description(int n, const std::vector<ZVec>& ineqs, std::vector<ZVec>& rays, std::vector<ZVec>& lineality);

// Saturated integer basis of span(C) cap Z^n with the lineality lattice in the last columns.
ZMat span_lattice_basis(const Cone& c);

// Minimal generating set of C cap Z^n (lineality directions appear with both signs).
std::vector<ZVec> lattice_generators(const Cone& c);
// Hilbert basis of the dual monoid of sigma, i.e. lattice_generators(sigma.dual()).
std::vector<ZVec> hilbert_basis(const Cone& sigma);

// Pulling triangulation of a pointed cone; rays are pulled in the order given.
std::vector<std::vector<ZVec>> triangulate(const Cone& c, const std::vector<ZVec>& order);
// Normalized lattice volume of {x in c : f.x <= 1} in span(c) cap Z^n; c pointed.
Q truncated_volume(const Cone& c, const QVec& f);

}  // namespace dtor
