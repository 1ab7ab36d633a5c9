#include "dwork/exactalg/series.hpp"

#include "dwork/error.hpp"

namespace dwork {

bool ZetaSeries::integral() const {
    for (const auto& c : coeffs)
        if (!is_integer(c)) return false;
    return true;
}

ZetaSeries series_exp_from_sums(const std::vector<BigRat>& sums) {
    const int K = static_cast<int>(sums.size());
    if (K < 1) throw InvalidArgument("series_exp_from_counts needs K >= 1");
    std::vector<BigRat> z(K + 1);
    z[0] = 1;
    for (int k = 1; k <= K; ++k) {
        BigRat acc = 0;
        for (int j = 1; j <= k; ++j) acc += sums[j - 1] * z[k - j];
        z[k] = acc / k;
    }
    return ZetaSeries(std::move(z));
}

ZetaSeries series_exp_from_counts(const std::vector<BigInt>& counts) {
    std::vector<BigRat> s(counts.begin(), counts.end());
    return series_exp_from_sums(s);
}

std::vector<BigRat> series_log_counts(const ZetaSeries& z) {
    if (z.coeffs.empty() || z[0] != 1) throw InvalidArgument("series_log_counts needs constant term 1");
    const int K = z.order();
    std::vector<BigRat> N(K);
    for (int k = 1; k <= K; ++k) {
        BigRat acc = z[k] * k;
        for (int j = 1; j < k; ++j) acc -= N[j - 1] * z[k - j];
        N[k - 1] = acc;
    }
    return N;
}

ZetaSeries series_one(int K) {
    std::vector<BigRat> c(K + 1, BigRat(0));
    c[0] = 1;
    return ZetaSeries(std::move(c));
}

ZetaSeries series_from_poly(const Poly& p, int K) {
    std::vector<BigRat> c(K + 1, BigRat(0));
    for (int i = 0; i <= std::min(K, p.degree()); ++i) c[i] = p[i];
    return ZetaSeries(std::move(c));
}

ZetaSeries series_from_rational(const Poly& num, const Poly& den, int K) {
    if (den.is_zero() || sgn(den[0]) == 0) throw InvalidArgument("series_from_rational: den(0) = 0");
    std::vector<BigRat> c(K + 1);
    for (int k = 0; k <= K; ++k) {
        BigRat acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den[j] * c[k - j];
        c[k] = acc / den[0];
    }
    return ZetaSeries(std::move(c));
}

ZetaSeries series_mul(const ZetaSeries& a, const ZetaSeries& b) {
    const int K = std::min(a.order(), b.order());
    std::vector<BigRat> c(K + 1, BigRat(0));
    for (int i = 0; i <= K; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= K; ++j) c[i + j] += a[i] * b[j];
    }
    return ZetaSeries(std::move(c), a.base_q);
}

ZetaSeries series_inv(const ZetaSeries& a) {
    if (a.coeffs.empty() || sgn(a[0]) == 0) throw InvalidArgument("series_inv: zero constant term");
    const int K = a.order();
    std::vector<BigRat> c(K + 1);
    BigRat inv0 = 1 / a[0];
    c[0] = inv0;
    for (int k = 1; k <= K; ++k) {
        BigRat acc = 0;
        for (int j = 1; j <= k; ++j) acc += a[j] * c[k - j];
        c[k] = -acc * inv0;
    }
    return ZetaSeries(std::move(c), a.base_q);
}

ZetaSeries series_div(const ZetaSeries& a, const ZetaSeries& b) { return series_mul(a, series_inv(b)); }

ZetaSeries series_pow(const ZetaSeries& a, long e) {
    ZetaSeries base = e < 0 ? series_inv(a) : a;
    unsigned long u = e < 0 ? -e : e;
    ZetaSeries r = series_one(a.order());
    r.base_q = a.base_q;
    while (u) {
        if (u & 1) r = series_mul(r, base);
        u >>= 1;
        if (u) base = series_mul(base, base);
    }
    return r;
}

ZetaSeries series_pow_rational(const ZetaSeries& a, long num, long den) {
    if (a.coeffs.empty() || a[0] != 1) throw InvalidArgument("series_pow_rational needs constant term 1");
    if (den == 0) throw InvalidArgument("series_pow_rational: zero denominator");
    std::vector<BigRat> logs = series_log_counts(a);
    BigRat f(num, den);
    f.canonicalize();
    for (auto& x : logs) x *= f;
    ZetaSeries r = series_exp_from_sums(logs);
    r.base_q = a.base_q;
    return r;
}

ZetaSeries series_truncate(const ZetaSeries& a, int K) {
    if (K > a.order()) throw InvalidArgument("series_truncate beyond known order");
    return ZetaSeries(std::vector<BigRat>(a.coeffs.begin(), a.coeffs.begin() + K + 1), a.base_q);
}

Poly series_to_poly(const ZetaSeries& a) { return Poly(a.coeffs); }

}  // namespace dwork
