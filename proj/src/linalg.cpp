#include "sppc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sppc/errors.hpp"

namespace sppc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw NumericalError("matmul: dimension mismatch");
    Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const double v = x(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

Matrix solve(Matrix A, Matrix B) {
    if (A.rows != A.cols || A.rows != B.rows) throw NumericalError("solve: dimension mismatch");
    const std::size_t n = A.rows;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
        if (std::abs(A(piv, k)) < 1e2 * std::numeric_limits<double>::min())
            throw NumericalError("solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            for (std::size_t j = 0; j < B.cols; ++j) std::swap(B(k, j), B(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = A(i, k) / A(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
            for (std::size_t j = 0; j < B.cols; ++j) B(i, j) -= f * B(k, j);
        }
    }
    Matrix X(n, B.cols);
    for (std::size_t jc = 0; jc < B.cols; ++jc) {
        for (std::size_t ii = n; ii-- > 0;) {
            double s = B(ii, jc);
            for (std::size_t j = ii + 1; j < n; ++j) s -= A(ii, j) * X(j, jc);
            X(ii, jc) = s / A(ii, ii);
        }
    }
    return X;
}

SymEigen sym_eigen(const Matrix& m) {
    if (m.rows != m.cols) throw NumericalError("sym_eigen: not square");
    const std::size_t n = m.rows;
    Matrix a = m;
    Matrix v = Matrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    SymEigen out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
    SymEigen sorted;
    sorted.values.resize(n);
    sorted.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted.values[j] = out.values[order[j]];
        for (std::size_t i = 0; i < n; ++i) sorted.vectors(i, j) = v(i, order[j]);
    }
    return sorted;
}

namespace {

Matrix eigen_rebuild(const SymEigen& e, double tol, bool square_root, const char* who) {
    const std::size_t n = e.values.size();
    double scale = 0.0;
    for (double w : e.values) scale = std::max(scale, std::abs(w));
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = e.values[k];
        if (w < -tol * std::max(1.0, scale))
            throw NumericalError(std::string(who) + ": matrix not positive semidefinite");
        if (w < 0.0) w = 0.0;
        const double f = square_root ? std::sqrt(w) : w;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) += f * e.vectors(i, k) * e.vectors(j, k);
    }
    return r;
}

}  // namespace

Matrix sym_sqrt(const Matrix& m, double tol) {
    return eigen_rebuild(sym_eigen(m), tol, true, "sym_sqrt");
}

Matrix psd_factor(const Matrix& m, double tol) {
    const SymEigen e = sym_eigen(m);
    const std::size_t n = e.values.size();
    double scale = 0.0;
    for (double w : e.values) scale = std::max(scale, std::abs(w));
    Matrix f(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double w = e.values[k];
        if (w < -tol * std::max(1.0, scale))
            throw NumericalError("psd_factor: matrix not positive semidefinite");
        if (w < 0.0) w = 0.0;
        const double s = std::sqrt(w);
        for (std::size_t i = 0; i < n; ++i) f(i, k) = e.vectors(i, k) * s;
    }
    return f;
}

double condition_number(const Matrix& m) {
    // Singular values via the eigenvalues of M M^T.
    Matrix g = matmul(m, m.transposed());
    const SymEigen e = sym_eigen(g);
    const double lo = std::max(e.values.front(), 0.0);
    const double hi = std::max(e.values.back(), 0.0);
    if (hi == 0.0) return std::numeric_limits<double>::infinity();
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

}  // namespace sppc
