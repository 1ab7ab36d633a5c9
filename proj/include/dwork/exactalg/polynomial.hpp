#pragma once
// Dense univariate polynomials, lowest degree first, templated on the scalar.

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dwork/exactalg/bigrat.hpp"
#include "dwork/exactalg/hp.hpp"

namespace dwork {

namespace detail {
template <class S>
bool exact_zero(const S& x) {
    if constexpr (std::is_same_v<S, BigRat>) return sgn(x) == 0;
    else if constexpr (std::is_same_v<S, BigInt>) return sgn(x) == 0;
    else if constexpr (std::is_arithmetic_v<S>) return x == S(0);
    else return false;  // floating complex values are never trimmed
}
}  // namespace detail

template <class Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Scalar s) { return Polynomial(std::vector<Scalar>{std::move(s)}); }
    static Polynomial one() { return constant(Scalar(1)); }
    // 1 - a T^d
    static Polynomial one_minus(const Scalar& a, int d = 1) {
        std::vector<Scalar> v(d + 1, Scalar(0));
        v[0] = Scalar(1);
        v[d] -= a;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Scalar(0); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }

    void set(int i, Scalar v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, Scalar(0));
        c_[i] = std::move(v);
        trim();
    }

    void trim() {
        while (!c_.empty() && detail::exact_zero(c_.back())) c_.pop_back();
    }

    Scalar eval(const Scalar& x) const {
        Scalar r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Polynomial derivative() const {
        std::vector<Scalar> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Scalar(static_cast<long>(i)));
        return Polynomial(std::move(v));
    }

    // p(mu T)
    Polynomial scale_var(const Scalar& mu) const {
        std::vector<Scalar> v(c_);
        Scalar f(1);
        for (auto& x : v) {
            x *= f;
            f *= mu;
        }
        return Polynomial(std::move(v));
    }

    // T^deg p(1/T)
    Polynomial reversed() const {
        std::vector<Scalar> v(c_.rbegin(), c_.rend());
        return Polynomial(std::move(v));
    }

    Polynomial truncated(int K) const {
        if (degree() <= K) return *this;
        return Polynomial(std::vector<Scalar>(c_.begin(), c_.begin() + K + 1));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

private:
    std::vector<Scalar> c_;
};

using Poly = Polynomial<BigRat>;

// Exact division with remainder over Q.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // normalised so that the constant term is 1 when nonzero, else monic
bool divides(const Poly& d, const Poly& a);
Poly poly_from_ints(const std::vector<long long>& v);
std::vector<std::string> coeff_strings(const Poly& p);
std::string to_string(const Poly& p);  // e.g. "1 - 3*T + 7*T^2"

}  // namespace dwork
