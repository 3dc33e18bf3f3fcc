#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <string>
#include <utility>

namespace sepdim {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class ScalarKind { Exact, Float };

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& num, const std::string& den) {
    Rational q(mpz_class(num), mpz_class(den));
    q.canonicalize();
    return q;
}

/*
 * Complex number with exact rational real and imaginary parts, i.e. an
 * element of the field Q(i). Closed under +,-,*,/ with no rounding, which
 * is what makes Jacobian ranks certificates instead of guesses.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}       // NOLINT(google-explicit-constructor)
    GaussianRational(long v) : re(v), im(0) {}      // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    static GaussianRational integer(long r, long i_part) {
        return {Rational(r), Rational(i_part)};
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    Rational norm2() const { return re * re + im * im; }

    Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

std::string to_string(const GaussianRational& z);

/*
 * The scalar abstraction that gives the tensor machinery one code path for
 * the exact and the float kind. `tol` arguments are ignored by the exact
 * kind, where every test is a literal sign test.
 */
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    using Real = Rational;
    static constexpr bool is_exact = true;
    static constexpr ScalarKind kind = ScalarKind::Exact;

    static GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }
    static Real real(const GaussianRational& z) { return z.re; }
    static Real imag(const GaussianRational& z) { return z.im; }
    static GaussianRational make(Real re, Real im) { return {std::move(re), std::move(im)}; }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& z, double = 0.0) { return z.is_zero(); }
    static bool equal(const GaussianRational& a, const GaussianRational& b, double = 0.0) {
        return a == b;
    }
    static double to_double(const Real& r) { return r.get_d(); }
    static Real real_zero() { return Rational(0); }
    static Real real_one() { return Rational(1); }
    static bool real_is_nonneg(const Real& r, double = 0.0) { return sgn(r) >= 0; }
    static bool real_is_zero(const Real& r, double = 0.0) { return sgn(r) == 0; }
    static double real_abs_double(const Real& r) { return std::abs(r.get_d()); }
};

template <>
struct ScalarTraits<Complex> {
    using Real = double;
    static constexpr bool is_exact = false;
    static constexpr ScalarKind kind = ScalarKind::Float;

    static Complex conjugate(const Complex& z) { return std::conj(z); }
    static Real real(const Complex& z) { return z.real(); }
    static Real imag(const Complex& z) { return z.imag(); }
    static Complex make(Real re, Real im) { return {re, im}; }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static bool is_zero(const Complex& z, double tol = 0.0) { return std::abs(z) <= tol; }
    static bool equal(const Complex& a, const Complex& b, double tol = 0.0) {
        return std::abs(a - b) <= tol;
    }
    static double to_double(Real r) { return r; }
    static Real real_zero() { return 0.0; }
    static Real real_one() { return 1.0; }
    static bool real_is_nonneg(Real r, double tol = 0.0) { return r >= -tol; }
    static bool real_is_zero(Real r, double tol = 0.0) { return std::abs(r) <= tol; }
    static double real_abs_double(Real r) { return std::abs(r); }
};

} // namespace sepdim
