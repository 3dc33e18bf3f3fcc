#pragma once

#include <cstddef>
#include <vector>

#include "sepdim/errors.hpp"
#include "sepdim/scalar.hpp"

namespace sepdim {

/// Dense row-major matrix over either scalar kind. Storage is deliberately
/// plain; everything at desk scale fits comfortably in memory.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::from_int(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<S>& data() const { return e_; }
    std::vector<S>& data() { return e_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conjugate() const {
        Matrix c(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) c(i, j) = ScalarTraits<S>::conjugate((*this)(i, j));
        return c;
    }

    Matrix adjoint() const {
        Matrix a(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) a(j, i) = ScalarTraits<S>::conjugate((*this)(i, j));
        return a;
    }

    S trace() const {
        S t{};
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_size(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_size(o);
        for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& v : e_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (ScalarTraits<S>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    void require_same_size(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sizes differ");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> e_;
};

using ExactMatrix = Matrix<GaussianRational>;
using ComplexMatrix = Matrix<Complex>;

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const S& aij = a(i, j);
            if (ScalarTraits<S>::is_zero(aij)) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

template <class S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!ScalarTraits<S>::equal(a(i, j), b(i, j), tol)) return false;
    return true;
}

/// Largest |entry| as a double (exact entries converted); 0 for empty.
template <class S>
double max_abs(const Matrix<S>& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const S& v = m(i, j);
            double re = ScalarTraits<S>::to_double(ScalarTraits<S>::real(v));
            double im = ScalarTraits<S>::to_double(ScalarTraits<S>::imag(v));
            double a = std::abs(re) + std::abs(im);
            if (a > best) best = a;
        }
    return best;
}

ComplexMatrix to_float(const ExactMatrix& m);

} // namespace sepdim
