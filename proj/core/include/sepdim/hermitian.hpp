#pragma once

#include <utility>
#include <vector>

#include "sepdim/matrix.hpp"
#include "sepdim/shape.hpp"

namespace sepdim {

/// Hermiticity slack accepted for float-kind operators.
inline constexpr double kHermitianFloatTol = 1e-12;

/*
 * A Hermitian operator on the composite space of `shape`, over either
 * scalar kind. Normalized states are the trace-one slice; operations here
 * work with non-normalized operators and expose trace() for callers that
 * need the slice.
 */
template <class S>
struct HermitianOp {
    SystemShape shape;
    Matrix<S> mat;

    static constexpr ScalarKind kind = ScalarTraits<S>::kind;

    int dim() const { return shape.total(); }

    typename ScalarTraits<S>::Real trace() const {
        return ScalarTraits<S>::real(mat.trace());
    }

    /// Validating factory: exact kind wants exact Hermiticity, float kind
    /// tolerates kHermitianFloatTol entrywise.
    static HermitianOp checked(SystemShape shape, Matrix<S> m);
};

template <class S>
bool is_hermitian(const Matrix<S>& m, double tol = kHermitianFloatTol) {
    if (m.rows() != m.cols()) return false;
    double t = ScalarTraits<S>::is_exact ? 0.0 : tol;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (!ScalarTraits<S>::equal(m(i, j), ScalarTraits<S>::conjugate(m(j, i)), t))
                return false;
    return true;
}

template <class S>
HermitianOp<S> HermitianOp<S>::checked(SystemShape shape, Matrix<S> m) {
    if (m.rows() != shape.total() || m.cols() != shape.total())
        throw ShapeError("operator size does not match shape");
    if (!is_hermitian(m)) throw ShapeError("matrix is not Hermitian");
    return HermitianOp{std::move(shape), std::move(m)};
}

using ExactOp = HermitianOp<GaussianRational>;
using FloatOp = HermitianOp<Complex>;

/// One tuple of local vectors (a_1,...,a_n), factor i of length d_i.
template <class S>
struct ProductVector {
    SystemShape shape;
    std::vector<std::vector<S>> factors;

    bool has_zero_factor() const {
        for (const auto& f : factors) {
            bool all_zero = true;
            for (const auto& v : f)
                if (!ScalarTraits<S>::is_zero(v)) {
                    all_zero = false;
                    break;
                }
            if (all_zero) return true;
        }
        return false;
    }

    ProductVector conjugated(SubsetMask which) const {
        ProductVector out = *this;
        for (int i = 0; i < shape.parties(); ++i)
            if (which.contains(i))
                for (auto& v : out.factors[static_cast<size_t>(i)])
                    v = ScalarTraits<S>::conjugate(v);
        return out;
    }

    /// All factor coordinates real (i.e. a real pure product direction).
    bool is_real(double tol = 1e-12) const {
        for (const auto& f : factors)
            for (const auto& v : f)
                if (!ScalarTraits<S>::real_is_zero(ScalarTraits<S>::imag(v), tol)) return false;
        return true;
    }
};

using ExactProductVector = ProductVector<GaussianRational>;
using FloatProductVector = ProductVector<Complex>;

template <class S>
ProductVector<S> make_product_vector(SystemShape shape, std::vector<std::vector<S>> factors) {
    if (static_cast<int>(factors.size()) != shape.parties())
        throw ShapeError("product vector: wrong number of factors");
    for (int i = 0; i < shape.parties(); ++i)
        if (static_cast<int>(factors[static_cast<size_t>(i)].size()) != shape.dim(i))
            throw ShapeError("product vector: factor length does not match party dimension");
    return ProductVector<S>{std::move(shape), std::move(factors)};
}

} // namespace sepdim
