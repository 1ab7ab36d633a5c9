#pragma once
// High-precision real/complex scalars and run-time precision dispatch.

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/math/constants/constants.hpp>
#include <gmpxx.h>

#include "dwork/error.hpp"

namespace dwork {

namespace bmp = boost::multiprecision;

using Real64 = long double;
using Real128 = bmp::number<bmp::cpp_bin_float<128, bmp::digit_base_2>, bmp::et_off>;
using Real256 = bmp::number<bmp::cpp_bin_float<256, bmp::digit_base_2>, bmp::et_off>;

template <class Real>
constexpr int mantissa_bits() {
    if constexpr (std::is_same_v<Real, long double>) return 64;
    else return std::numeric_limits<Real>::digits;
}

template <class Real>
Real pi() {
    if constexpr (std::is_same_v<Real, long double>) return 3.141592653589793238462643383279502884L;
    else return boost::math::constants::pi<Real>();
}

template <class Real>
Real real_from(const mpz_class& z) {
    if (z.fits_slong_p()) return Real(z.get_si());
    if constexpr (std::is_same_v<Real, long double>) return std::stold(z.get_str());
    else return Real(z.get_str());
}

template <class Real>
Real real_from(const mpq_class& x) {
    return real_from<Real>(x.get_num()) / real_from<Real>(x.get_den());
}

template <class Real>
mpz_class round_to_mpz(const Real& x) {
    using std::round;
    Real r = round(x);
    if constexpr (std::is_same_v<Real, long double>) {
        if (std::fabs(r) < 9.0e18L) return mpz_class(std::to_string(static_cast<long long>(r)));
        char buf[6000];
        std::snprintf(buf, sizeof buf, "%.0Lf", r);
        return mpz_class(buf);
    } else {
        if (abs(r) < Real(9.0e18)) return mpz_class(std::to_string(r.template convert_to<long long>()));
        return mpz_class(r.template convert_to<bmp::cpp_int>().str());
    }
}

template <class Real>
long double to_ld(const Real& x) {
    if constexpr (std::is_same_v<Real, long double>) return x;
    else return x.template convert_to<long double>();
}

// Plain aggregate rather than std::complex: std::complex<T> is unspecified for
// non-arithmetic T.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class Real>
Complex<Real> conj(const Complex<Real>& z) { return {z.re, -z.im}; }

template <class Real>
Real norm(const Complex<Real>& z) { return z.re * z.re + z.im * z.im; }

template <class Real>
Real abs(const Complex<Real>& z) {
    using std::sqrt;
    return sqrt(norm(z));
}

// exp(2 pi i num/den)
template <class Real>
Complex<Real> unit_root(long long num, long long den) {
    using std::cos;
    using std::sin;
    num %= den;
    if (num < 0) num += den;
    Real t = 2 * pi<Real>() * Real(num) / Real(den);
    return {cos(t), sin(t)};
}

template <class Real>
Complex<Real> cpow(Complex<Real> z, unsigned long long e) {
    Complex<Real> r(Real(1));
    while (e) {
        if (e & 1) r *= z;
        e >>= 1;
        if (e) z *= z;
    }
    return r;
}

template <class Real>
std::string to_string_real(const Real& x, int digits = 30) {
    if constexpr (std::is_same_v<Real, long double>) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
        return buf;
    } else {
        return x.str(digits);
    }
}

// Calls f.template operator()<Real>() with the scalar for the requested
// mantissa width (64, 128 or 256).
template <class F>
decltype(auto) with_precision(int bits, F&& f) {
    if (bits <= 64) return f.template operator()<Real64>();
    if (bits <= 128) return f.template operator()<Real128>();
    if (bits <= 256) return f.template operator()<Real256>();
    throw InvalidArgument("precision bits " + std::to_string(bits) + " above 256");
}

// Same, retrying at doubled width when the computation reports PrecisionLoss.
template <class F>
decltype(auto) with_precision_retry(int bits, F&& f) {
    try {
        return with_precision(bits, f);
    } catch (const PrecisionLoss&) {
        if (bits >= 256) throw;
        return with_precision(bits <= 64 ? 128 : 256, f);
    }
}

}  // namespace dwork
