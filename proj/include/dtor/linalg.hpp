#pragma once

#include <vector>

#include "dtor/rational.hpp"

namespace dtor {

using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

Q dot(const QVec& a, const QVec& b);
Z dot(const ZVec& a, const ZVec& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m);
int rank(const QMat& m);
// Rows spanning {x : m x = 0}; ncols needed when m is empty.
QMat nullspace(const QMat& m, int ncols);
Q det(QMat m);
QMat inverse(const QMat& m);
QMat transpose(const QMat& m);
QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& a, const QVec& x);
QMat to_qmat(const ZMat& m);

// Orthogonal projection of x onto the complement of span(rows).
QVec project_out(const QVec& x, const QMat& rows);

// Canonical basis of a row space: rref rows scaled to primitive integers.
ZMat canonical_row_basis(const QMat& rows, int ncols);

// Unimodular U (columns) with E*U = [H | 0]; returns rank(E). The last
// n - rank columns of U form a basis of the saturated lattice ker(E) cap Z^n.
int kernel_lattice(const ZMat& E, int n, ZMat& U);

// Integer vectors x with x = B*lambda, 0 <= lambda_i < 1, for a square
// nonsingular integer matrix B given by its columns.
std::vector<ZVec> parallelepiped_points(const ZMat& cols);

}  // namespace dtor
