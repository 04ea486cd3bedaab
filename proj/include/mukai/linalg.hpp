#pragma once

#include "mukai/rational.hpp"

#include <stdexcept>
#include <vector>

namespace mukai {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline QMat identity_mat(std::size_t n) {
    QMat m(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QVec mat_vec(const QMat& m, const QVec& x) {
    QVec y(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
    }
    return y;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    QMat c(n, QVec(p, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("matrix dimension mismatch");
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    }
    return c;
}

inline QMat mat_transpose(const QMat& a) {
    const std::size_t n = a.size(), p = a.empty() ? 0 : a[0].size();
    QMat t(p, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) t[j][i] = a[i][j];
    return t;
}

/// Gauss-Jordan; returns {inverse, det}. Throws on singular input.
inline std::pair<QMat, Rat> mat_inverse(QMat a) {
    const std::size_t n = a.size();
    QMat inv = identity_mat(n);
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        const Rat p = a[col][col];
        det *= p;
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return {inv, det};
}

/// Rational basis of the right kernel of a (rows x cols) matrix.
inline std::vector<QVec> mat_nullspace(QMat a) {
    if (a.empty()) return {};
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        const Rat p = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        QVec v(cols, Rat(0));
        v[freec] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mukai
