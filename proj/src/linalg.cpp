#include "gmverify/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gmv {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix sum dimension mismatch");
    Matrix out = *this;
    for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] += rhs.data_[t];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw input_error("matrix difference dimension mismatch");
    Matrix out = *this;
    for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] -= rhs.data_[t];
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double Matrix::trace() const {
    if (rows_ != cols_) throw input_error("trace of a non-square matrix");
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

double norm1(const Matrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        double col = 0.0;
        for (int i = 0; i < a.rows(); ++i) col += std::abs(a(i, j));
        best = std::max(best, col);
    }
    return best;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw input_error("inverse of a non-square matrix");
    const int n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
        if (std::abs(w(piv, col)) < 1e-300) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w(piv, j), w(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const double d = w(col, col);
        for (int j = 0; j < n; ++j) {
            w(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = w(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                w(r, j) -= f * w(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw input_error("symmetric matrix needs dimension >= 1");
    tri_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
    if (n_ != rhs.n_) throw input_error("symmetric sum dimension mismatch");
    SymMatrix out = *this;
    for (std::size_t t = 0; t < tri_.size(); ++t) out.tri_[t] += rhs.tri_[t];
    return out;
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const double v = (*this)(i, j);
            s += v * v;
        }
    return std::sqrt(s);
}

Matrix SymMatrix::dense() const {
    Matrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace

EigDecomp eigh(const SymMatrix& h) {
    const int n = h.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = h(i, j);
    Matrix vecs = Matrix::identity(n);

    const double fro = h.frobenius_norm();
    const double target = 1e-13 * fro;
    constexpr int kMaxSweeps = 64;

    double off = off_diagonal_norm(a, n);
    int sweep = 0;
    for (; sweep < kMaxSweeps && off > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta);
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double& akp = a[static_cast<std::size_t>(k) * n + p];
                    double& akq = a[static_cast<std::size_t>(k) * n + q];
                    const double kp = akp, kq = akq;
                    akp = c * kp - s * kq;
                    akq = s * kp + c * kq;
                    a[static_cast<std::size_t>(p) * n + k] = akp;
                    a[static_cast<std::size_t>(q) * n + k] = akq;
                }
                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;

                for (int k = 0; k < n; ++k) {
                    const double vkp = vecs(k, p), vkq = vecs(k, q);
                    vecs(k, p) = c * vkp - s * vkq;
                    vecs(k, q) = s * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(a, n);
    }
    if (off > target)
        throw numeric_error("jacobi sweeps exhausted; off-diagonal norm " + std::to_string(off) +
                            " above target " + std::to_string(target));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
    });

    EigDecomp out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        out.values[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(src) * n + src];
        for (int i = 0; i < n; ++i) out.vectors(i, j) = vecs(i, src);
    }
    return out;
}

std::optional<SubspaceNormalForm> top_subspace(const EigDecomp& e, int k, double gap_tol,
                                               double cond_tol) {
    const int n = e.dim();
    if (k < 1 || k >= n) throw input_error("top_subspace requires 1 <= k < n");
    const double gap = e.values[static_cast<std::size_t>(k - 1)] - e.values[static_cast<std::size_t>(k)];
    if (!(gap > gap_tol))
        throw gap_error("spectral gap " + std::to_string(gap) + " at k=" + std::to_string(k) +
                        " is below tolerance; subspace is not well defined");

    Matrix u1(k, k), u2(n - k, k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) u1(i, j) = e.vectors(i, j);
        for (int i = k; i < n; ++i) u2(i - k, j) = e.vectors(i, j);
    }
    auto inv = try_inverse(u1);
    if (!inv) return std::nullopt;
    if (norm1(u1) * norm1(*inv) > cond_tol) return std::nullopt;
    return SubspaceNormalForm{u2 * *inv};
}

double quadratic_form(const SymMatrix& h, std::span<const double> x) {
    const int n = h.dim();
    if (static_cast<int>(x.size()) != n) throw input_error("quadratic form dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += h(i, j) * x[static_cast<std::size_t>(j)];
        s += x[static_cast<std::size_t>(i)] * row;
    }
    return s;
}

}  // namespace gmv
