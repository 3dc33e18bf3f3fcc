#pragma once

#include <vector>

#include "sepdim/hermitian.hpp"

namespace sepdim {

/// Default relative tolerance for float-kind characteristic-coefficient
/// sign tests (exact kind ignores it).
inline constexpr double kPsdCoeffTol = 1e-10;
/// Entrywise tolerance for float-kind G-invariance and equality tests.
inline constexpr double kEntryTol = 1e-10;

/// |a_1><a_1| x ... x |a_n><a_n|: rank-one PSD, trace = prod ||a_i||^2.
/// Throws DegenerateVector on a zero factor.
template <class S>
HermitianOp<S> product_state(const ProductVector<S>& v);

/// Transpose the tensor factors selected by `parties` in the fixed product
/// basis. Involutive, trace- and Hermiticity-preserving.
template <class S>
HermitianOp<S> partial_transpose(const HermitianOp<S>& op, SubsetMask parties);

/// Reduction to one party: trace out everything else.
template <class S>
HermitianOp<S> partial_trace(const HermitianOp<S>& op, int keep_party);

/// Ranks of the single-party reductions (exact kind: certified ranks).
template <class S>
std::vector<int> local_ranks(const HermitianOp<S>& op);

/*
 * Coefficients c_0..c_d with det(tI - rho) = sum_i (-1)^i c_i t^(d-i);
 * c_i is the sum of the principal minors of order i. Computed with the
 * division-free Berkowitz recursion so the exact kind never leaves Q(i).
 */
template <class S>
std::vector<typename ScalarTraits<S>::Real> char_poly_coeffs(const HermitianOp<S>& op);

template <>
std::vector<Rational> char_poly_coeffs(const HermitianOp<GaussianRational>& op);
template <>
std::vector<double> char_poly_coeffs(const HermitianOp<Complex>& op);

/// Positive semidefinite iff every c_i >= 0. Exact kind: exact sign tests.
/// Float kind: c_i >= -tol * max(1, |c|_inf).
template <class S>
bool is_psd(const HermitianOp<S>& op, double tol = kPsdCoeffTol);

template <>
bool is_psd(const HermitianOp<GaussianRational>& op, double tol);
template <>
bool is_psd(const HermitianOp<Complex>& op, double tol);

/// All 2^n partial transposes positive semidefinite.
template <class S>
bool is_ppt(const HermitianOp<S>& op, double tol = kPsdCoeffTol);

/// Fixed by every single-party transpose (hence by all of G). G-invariant
/// operators are real, which callers may rely on.
template <class S>
bool is_g_invariant(const HermitianOp<S>& op, double tol = kEntryTol);

/// (V_1 x ... x V_n) rho (V_1 x ... x V_n)^dagger with invertible V_i.
/// Preserves separability, length, rank and the PPT property.
template <class S>
HermitianOp<S> apply_local(const HermitianOp<S>& op, const std::vector<Matrix<S>>& locals);

} // namespace sepdim
