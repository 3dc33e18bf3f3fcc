#include "sepdim/tensor_ops.hpp"

#include <algorithm>
#include <cmath>

#include "sepdim/rank.hpp"

namespace sepdim {
namespace {

// Division-free Berkowitz recursion. Works bottom-up over trailing principal
// submatrices: if p is the monic characteristic polynomial of the (m-1)x(m-1)
// trailing block M, the polynomial of the m x m block [[a, R], [C, M]] is
// T * p, where T is the lower-triangular Toeplitz matrix whose first column
// is (1, -a, -R C, -R M C, -R M^2 C, ...).
template <class T>
std::vector<T> berkowitz(const std::vector<T>& a, int d) {
    std::vector<T> poly(1, T(1));
    if (d == 0) return poly;
    auto at = [&](int i, int j) -> const T& { return a[static_cast<size_t>(i) * d + j]; };

    std::vector<T> col, next, v, w;
    for (int top = d - 1; top >= 0; --top) {
        const int m = d - 1 - top; // size of the trailing block below `top`
        const int len = static_cast<int>(poly.size());

        col.assign(static_cast<size_t>(len) + 1, T(0));
        col[0] = T(1);
        col[1] = T(0) - at(top, top);
        if (m > 0 && len >= 2) {
            v.assign(static_cast<size_t>(m), T(0));
            for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = at(top + 1 + i, top);
            for (int k = 2; k <= len; ++k) {
                T dot(0);
                for (int i = 0; i < m; ++i) dot += at(top, top + 1 + i) * v[static_cast<size_t>(i)];
                col[static_cast<size_t>(k)] = T(0) - dot;
                if (k == len) break;
                w.assign(static_cast<size_t>(m), T(0));
                for (int i = 0; i < m; ++i) {
                    T acc(0);
                    for (int j = 0; j < m; ++j)
                        acc += at(top + 1 + i, top + 1 + j) * v[static_cast<size_t>(j)];
                    w[static_cast<size_t>(i)] = acc;
                }
                v.swap(w);
            }
        }

        next.assign(static_cast<size_t>(len) + 1, T(0));
        for (int r = 0; r <= len; ++r)
            for (int c = std::max(0, r - len); c <= std::min(r, len - 1); ++c)
                next[static_cast<size_t>(r)] += col[static_cast<size_t>(r - c)] * poly[static_cast<size_t>(c)];
        poly.swap(next);
    }
    return poly;
}

struct ZG {
    mpz_class re, im;
    ZG() : re(0), im(0) {}
    explicit ZG(int v) : re(v), im(0) {}
    ZG(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    ZG& operator+=(const ZG& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend ZG operator-(const ZG& a, const ZG& b) { return {a.re - b.re, a.im - b.im}; }
    friend ZG operator*(const ZG& a, const ZG& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

// Exact-kind characteristic coefficients: scale the operator to Gaussian
// integers (lambda = lcm of all denominators), run Berkowitz over Z[i], and
// undo the scaling with c_i(lambda * rho) = lambda^i c_i(rho).
struct ExactCharPoly {
    std::vector<Rational> coeffs; // c_0..c_d of the original operator
    std::vector<int> signs;       // sign of each c_i (valid before division)
};

ExactCharPoly exact_char_poly(const ExactMatrix& m) {
    const int d = m.rows();
    mpz_class lambda(1);
    for (const auto& z : m.data()) {
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), z.re.get_den_mpz_t());
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), z.im.get_den_mpz_t());
    }
    std::vector<ZG> a(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const GaussianRational& z = m(i, j);
            a[static_cast<size_t>(i) * d + j] =
                ZG{z.re.get_num() * mpz_class(lambda / z.re.get_den()),
                   z.im.get_num() * mpz_class(lambda / z.im.get_den())};
        }
    std::vector<ZG> p = berkowitz(a, d);

    ExactCharPoly out;
    out.coeffs.reserve(p.size());
    out.signs.reserve(p.size());
    mpz_class lambda_pow(1);
    for (int i = 0; i <= d; ++i) {
        ZG& pi = p[static_cast<size_t>(i)];
        if (sgn(pi.im) != 0)
            throw NumericalFailure("characteristic coefficient of a Hermitian operator not real");
        mpz_class ci = (i % 2 == 0) ? pi.re : mpz_class(-pi.re);
        out.signs.push_back(sgn(ci));
        Rational q(ci, lambda_pow);
        q.canonicalize();
        out.coeffs.push_back(q);
        lambda_pow *= lambda;
    }
    return out;
}

std::vector<double> float_char_poly(const ComplexMatrix& m) {
    const int d = m.rows();
    std::vector<Complex> p = berkowitz(m.data(), d);
    std::vector<double> out(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        double c = p[static_cast<size_t>(i)].real();
        out[static_cast<size_t>(i)] = (i % 2 == 0) ? c : -c;
    }
    return out;
}

} // namespace

template <class S>
HermitianOp<S> product_state(const ProductVector<S>& v) {
    if (v.factors.empty()) throw ShapeError("product vector has no factors");
    if (v.has_zero_factor()) throw DegenerateVector("product vector has a zero factor");

    const SystemShape& shape = v.shape;
    const int n = shape.parties();
    const int d = shape.total();
    Matrix<S> out(d, d);
    std::vector<int> ri(static_cast<size_t>(n)), ci(static_cast<size_t>(n));
    for (int r = 0; r < d; ++r) {
        shape.decode_into(r, ri.data());
        for (int c = 0; c < d; ++c) {
            shape.decode_into(c, ci.data());
            S val = ScalarTraits<S>::from_int(1);
            for (int j = 0; j < n; ++j) {
                const auto& f = v.factors[static_cast<size_t>(j)];
                val *= f[static_cast<size_t>(ri[static_cast<size_t>(j)])] *
                       ScalarTraits<S>::conjugate(f[static_cast<size_t>(ci[static_cast<size_t>(j)])]);
            }
            out(r, c) = val;
        }
    }
    return HermitianOp<S>{shape, std::move(out)};
}

template <class S>
HermitianOp<S> partial_transpose(const HermitianOp<S>& op, SubsetMask parties) {
    const SystemShape& shape = op.shape;
    const int n = shape.parties();
    const int d = shape.total();
    Matrix<S> out(d, d);
    std::vector<int> ri(static_cast<size_t>(n)), ci(static_cast<size_t>(n));
    for (int r = 0; r < d; ++r) {
        shape.decode_into(r, ri.data());
        for (int c = 0; c < d; ++c) {
            shape.decode_into(c, ci.data());
            std::vector<int> sr = ri, sc = ci;
            for (int j = 0; j < n; ++j)
                if (parties.contains(j)) std::swap(sr[static_cast<size_t>(j)], sc[static_cast<size_t>(j)]);
            out(shape.encode(sr), shape.encode(sc)) = op.mat(r, c);
        }
    }
    return HermitianOp<S>{shape, std::move(out)};
}

template <class S>
HermitianOp<S> partial_trace(const HermitianOp<S>& op, int keep_party) {
    const SystemShape& shape = op.shape;
    const int n = shape.parties();
    if (keep_party < 0 || keep_party >= n) throw ShapeError("partial_trace: bad party index");
    const int dk = shape.dim(keep_party);
    Matrix<S> out(dk, dk);

    const int d = shape.total();
    std::vector<int> ri(static_cast<size_t>(n));
    for (int r = 0; r < d; ++r) {
        shape.decode_into(r, ri.data());
        // column index agreeing with r on every party except keep_party
        std::vector<int> ci = ri;
        const int a = ri[static_cast<size_t>(keep_party)];
        for (int b = 0; b < dk; ++b) {
            ci[static_cast<size_t>(keep_party)] = b;
            out(a, b) += op.mat(r, shape.encode(ci));
        }
    }
    return HermitianOp<S>{SystemShape({dk}), std::move(out)};
}

template <class S>
std::vector<int> local_ranks(const HermitianOp<S>& op) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(op.shape.parties()));
    for (int i = 0; i < op.shape.parties(); ++i) {
        HermitianOp<S> red = partial_trace(op, i);
        if constexpr (ScalarTraits<S>::is_exact)
            out.push_back(rank_exact(red.mat));
        else
            out.push_back(rank_numeric(red.mat));
    }
    return out;
}

template <>
std::vector<Rational> char_poly_coeffs(const ExactOp& op) {
    return exact_char_poly(op.mat).coeffs;
}

template <>
std::vector<double> char_poly_coeffs(const FloatOp& op) {
    return float_char_poly(op.mat);
}

template <>
bool is_psd(const ExactOp& op, double) {
    ExactCharPoly p = exact_char_poly(op.mat);
    for (int s : p.signs)
        if (s < 0) return false;
    return true;
}

template <>
bool is_psd(const FloatOp& op, double tol) {
    std::vector<double> c = float_char_poly(op.mat);
    double scale = 1.0;
    for (double ci : c) scale = std::max(scale, std::abs(ci));
    for (double ci : c)
        if (ci < -tol * scale) return false;
    return true;
}

template <class S>
bool is_ppt(const HermitianOp<S>& op, double tol) {
    for (SubsetMask s : SubsetMask::all(op.shape.parties()))
        if (!is_psd(partial_transpose(op, s), tol)) return false;
    return true;
}

template <class S>
bool is_g_invariant(const HermitianOp<S>& op, double tol) {
    double t = ScalarTraits<S>::is_exact ? 0.0 : tol;
    for (int i = 0; i < op.shape.parties(); ++i) {
        HermitianOp<S> pt = partial_transpose(op, SubsetMask::single(i));
        if (!approx_equal(pt.mat, op.mat, t)) return false;
    }
    return true;
}

template <class S>
HermitianOp<S> apply_local(const HermitianOp<S>& op, const std::vector<Matrix<S>>& locals) {
    const SystemShape& shape = op.shape;
    if (static_cast<int>(locals.size()) != shape.parties())
        throw ShapeError("apply_local: one matrix per party required");
    for (int i = 0; i < shape.parties(); ++i) {
        const Matrix<S>& v = locals[static_cast<size_t>(i)];
        if (v.rows() != shape.dim(i) || v.cols() != shape.dim(i))
            throw ShapeError("apply_local: local matrix size mismatch");
        int r;
        if constexpr (ScalarTraits<S>::is_exact)
            r = rank_exact(v);
        else
            r = rank_numeric(v, 1e-12);
        if (r != shape.dim(i)) throw SingularLocalOp("apply_local: singular local operator");
    }
    Matrix<S> big = locals[0];
    for (int i = 1; i < shape.parties(); ++i) big = kron(big, locals[static_cast<size_t>(i)]);
    Matrix<S> res = big * op.mat * big.adjoint();
    return HermitianOp<S>{shape, std::move(res)};
}

template HermitianOp<GaussianRational> product_state(const ProductVector<GaussianRational>&);
template HermitianOp<Complex> product_state(const ProductVector<Complex>&);
template HermitianOp<GaussianRational> partial_transpose(const HermitianOp<GaussianRational>&, SubsetMask);
template HermitianOp<Complex> partial_transpose(const HermitianOp<Complex>&, SubsetMask);
template HermitianOp<GaussianRational> partial_trace(const HermitianOp<GaussianRational>&, int);
template HermitianOp<Complex> partial_trace(const HermitianOp<Complex>&, int);
template std::vector<int> local_ranks(const HermitianOp<GaussianRational>&);
template std::vector<int> local_ranks(const HermitianOp<Complex>&);
template bool is_ppt(const HermitianOp<GaussianRational>&, double);
template bool is_ppt(const HermitianOp<Complex>&, double);
template bool is_g_invariant(const HermitianOp<GaussianRational>&, double);
template bool is_g_invariant(const HermitianOp<Complex>&, double);
template HermitianOp<GaussianRational> apply_local(const HermitianOp<GaussianRational>&,
                                                   const std::vector<Matrix<GaussianRational>>&);
template HermitianOp<Complex> apply_local(const HermitianOp<Complex>&, const std::vector<Matrix<Complex>>&);

} // namespace sepdim
