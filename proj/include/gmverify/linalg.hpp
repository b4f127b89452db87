#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gmverify/errors.hpp"

namespace gmv {

/// Dense row-major matrix with just the operations needed here.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix transposed() const;

    double max_abs() const;
    double frobenius_norm() const;
    double trace() const;

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Column-wise 1-norm.
double norm1(const Matrix& a);

/// Gauss-Jordan inverse with partial pivoting; nullopt on a vanishing pivot.
std::optional<Matrix> try_inverse(const Matrix& a);

/// Symmetric matrix, packed lower-triangle storage: symmetric by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return tri_[index(i, j)]; }
    void set(int i, int j, double v) { tri_[index(i, j)] = v; }

    SymMatrix operator+(const SymMatrix& rhs) const;
    double trace() const;
    double frobenius_norm() const;
    Matrix dense() const;

    bool operator==(const SymMatrix&) const = default;

private:
    static std::size_t index(int i, int j) {
        if (i < j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }
    int n_ = 0;
    std::vector<double> tri_;
};

/// Eigenvalues sorted non-increasing, paired orthonormal eigenvector columns.
struct EigDecomp {
    std::vector<double> values;
    Matrix vectors;

    int dim() const { return static_cast<int>(values.size()); }
};

inline constexpr double kEigTol = 1e-11;   // relative to the Frobenius norm
inline constexpr double kGapTol = 1e-8;
inline constexpr double kCondTol = 1e10;

/// Cyclic Jacobi: row-cyclic sweeps, one rotation per off-diagonal pair,
/// converged when the off-diagonal Frobenius norm drops below 1e-13*|H|_F.
/// Throws numeric_error (with the norm reached) after 64 sweeps.
EigDecomp eigh(const SymMatrix& h);

/// Normal form of a subspace: the columns of (I_k stacked over v) span it.
struct SubspaceNormalForm {
    Matrix v;  // (n-k) x k
};

/// Normal form of the span of the k leading eigenvectors. Requires a spectral
/// gap above gap_tol (gap_error otherwise); returns nullopt when the leading
/// k x k eigenvector block is singular within cond_tol.
std::optional<SubspaceNormalForm> top_subspace(const EigDecomp& e, int k,
                                               double gap_tol = kGapTol,
                                               double cond_tol = kCondTol);

double quadratic_form(const SymMatrix& h, std::span<const double> x);

}  // namespace gmv
