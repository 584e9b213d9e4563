#pragma once

#include <cstddef>
#include <vector>

namespace sppc {

/// Dense row-major matrix. Everything in this project is tiny (a handful of
/// stocks plus performance variables), so the solvers below are plain
/// partial-pivot elimination and Jacobi rotations rather than a BLAS.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n);
    Matrix transposed() const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Matrix matmul(const Matrix& x, const Matrix& y);

/// Solves A X = B for square A (Gaussian elimination, partial pivoting).
/// Throws NumericalError when A is numerically singular.
Matrix solve(Matrix A, Matrix B);

struct SymEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns are eigenvectors
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SymEigen sym_eigen(const Matrix& m);

/// Symmetric square root of a symmetric PSD matrix.
/// Eigenvalues in [-tol, 0) are clamped to 0; below -tol it throws.
Matrix sym_sqrt(const Matrix& m, double tol = 1e-12);

/// Factor F with F F^T = m (eigenvector * sqrt(eigenvalue) columns), for
/// sampling from a possibly singular covariance. Same tolerance rule.
Matrix psd_factor(const Matrix& m, double tol = 1e-10);

/// Smallest/largest singular values and the 2-norm condition number.
double condition_number(const Matrix& m);

}  // namespace sppc
