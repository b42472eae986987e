#include "dtor/linalg.hpp"

#include <stdexcept>

namespace dtor {

Q dot(const QVec& a, const QVec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Z dot(const ZVec& a, const ZVec& b) {
    Z s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> piv;
    if (m.empty()) return piv;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return piv;
}

int rank(const QMat& m) {
    QMat a = m;
    return static_cast<int>(rref(a).size());
}

QMat nullspace(const QMat& m, int ncols) {
    QMat a = m;
    auto piv = rref(a);
    std::vector<bool> is_piv(ncols, false);
    for (int p : piv) is_piv[p] = true;
    QMat out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVec v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(v);
    }
    return out;
}

Q det(QMat m) {
    size_t n = m.size();
    Q d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

QMat inverse(const QMat& m) {
    size_t n = m.size();
    QMat a(n, QVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    auto piv = rref(a);
    if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw std::domain_error("singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMat matmul(const QMat& a, const QMat& b) {
    QMat r(a.size(), QVec(b.empty() ? 0 : b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QVec matvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

QMat to_qmat(const ZMat& m) {
    QMat r;
    for (const auto& row : m) r.push_back(to_q(row));
    return r;
}

QVec project_out(const QVec& x, const QMat& rows) {
    if (rows.empty()) return x;
    // solve (B B^T) c = B x, return x - B^T c
    size_t k = rows.size();
    QMat G(k, QVec(k));
    QVec rhs(k);
    for (size_t i = 0; i < k; ++i) {
        rhs[i] = dot(rows[i], x);
        for (size_t j = 0; j < k; ++j) G[i][j] = dot(rows[i], rows[j]);
    }
    QVec c = matvec(inverse(G), rhs);
    QVec r = x;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < x.size(); ++j) r[j] -= c[i] * rows[i][j];
    return r;
}

ZMat canonical_row_basis(const QMat& rows, int ncols) {
    QMat a = rows;
    rref(a);
    ZMat out;
    for (const auto& r : a) {
        if (static_cast<int>(r.size()) != ncols) throw std::logic_error("row width mismatch");
        out.push_back(primitive(r));
    }
    return out;
}

namespace {

// extended gcd on mpz: g = a*x + b*y
void xgcd(const Z& a, const Z& b, Z& g, Z& x, Z& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

int kernel_lattice(const ZMat& E, int n, ZMat& U) {
    // U stored as columns: U[j] is column j
    U.assign(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;
    ZMat A = E;  // rows of E, operated on by column ops
    size_t m = A.size();
    int r = 0;
    for (size_t row = 0; row < m && r < n; ++row) {
        // clear A[row][c] for c > r using columns r..n-1
        for (int c = r + 1; c < n; ++c) {
            if (A[row][c] == 0) continue;
            Z a = A[row][r], b = A[row][c], g, x, y;
            xgcd(a, b, g, x, y);
            Z ag = a / g, bg = b / g;
            // new col r = x*col_r + y*col_c ; new col c = -bg*col_r + ag*col_c
            for (size_t i = 0; i < m; ++i) {
                Z cr = A[i][r], cc = A[i][c];
                A[i][r] = x * cr + y * cc;
                A[i][c] = -bg * cr + ag * cc;
            }
            ZVec ur = U[r], uc = U[c];
            for (int i = 0; i < n; ++i) {
                U[r][i] = x * ur[i] + y * uc[i];
                U[c][i] = -bg * ur[i] + ag * uc[i];
            }
        }
        if (A[row][r] != 0) ++r;
    }
    return r;
}

std::vector<ZVec> parallelepiped_points(const ZMat& cols) {
    size_t n = cols.size();
    // lattice L = B Z^n; Hermite form via column ops gives lower-triangular H with same lattice
    ZMat Hc = cols;  // columns
    // column-style HNF: make H[i][j] = 0 for j > i (row i, column j)
    for (size_t row = 0; row < n; ++row) {
        for (size_t c = row + 1; c < n; ++c) {
            if (Hc[c][row] == 0) continue;
            Z a = Hc[row][row], b = Hc[c][row], g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Z ag = a / g, bg = b / g;
            ZVec cr = Hc[row], cc = Hc[c];
            for (size_t i = 0; i < n; ++i) {
                Hc[row][i] = x * cr[i] + y * cc[i];
                Hc[c][i] = -bg * cr[i] + ag * cc[i];
            }
        }
        if (Hc[row][row] < 0)
            for (auto& v : Hc[row]) v = -v;
        if (Hc[row][row] == 0) throw std::domain_error("singular cone basis");
    }
    // coset representatives: x with 0 <= x_i < H_ii reduced triangularly
    QMat B(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) B[i][j] = cols[j][i];
    QMat Binv = inverse(B);
    std::vector<ZVec> out;
    ZVec x(n, 0);
    std::vector<long> bound(n);
    for (size_t i = 0; i < n; ++i) bound[i] = Hc[i][i].get_si();
    std::vector<long> idx(n, 0);
    while (true) {
        for (size_t i = 0; i < n; ++i) x[i] = idx[i];
        QVec lam = matvec(Binv, to_q(x));
        QVec y(n, 0);
        for (size_t j = 0; j < n; ++j) {
            Q f = lam[j] - Q(floor_q(lam[j]));
            for (size_t i = 0; i < n; ++i) y[i] += f * Q(cols[j][i]);
        }
        ZVec p(n);
        for (size_t i = 0; i < n; ++i) p[i] = y[i].get_num();
        out.push_back(p);
        size_t k = 0;
        while (k < n && ++idx[k] >= bound[k]) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

}  // namespace dtor
