#pragma once
// Truncated power series over Q, known modulo T^{order+1}.

#include <vector>

#include "dwork/exactalg/bigrat.hpp"
#include "dwork/exactalg/polynomial.hpp"

namespace dwork {

struct ZetaSeries {
    std::vector<BigRat> coeffs;  // coeffs[0..order]
    BigInt base_q = 0;           // 0 when not attached to a field size

    ZetaSeries() = default;
    explicit ZetaSeries(std::vector<BigRat> c, BigInt q = 0) : coeffs(std::move(c)), base_q(std::move(q)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigRat& operator[](int i) const { return coeffs[i]; }
    bool integral() const;
    friend bool operator==(const ZetaSeries& a, const ZetaSeries& b) { return a.coeffs == b.coeffs; }
};

// exp(sum_k N_k T^k / k); counts[k-1] = N_k.
ZetaSeries series_exp_from_counts(const std::vector<BigInt>& counts);
ZetaSeries series_exp_from_sums(const std::vector<BigRat>& sums);
// Inverse of the above: the N_k with T d/dT log Z = sum N_k T^k.
std::vector<BigRat> series_log_counts(const ZetaSeries& z);

ZetaSeries series_one(int K);
ZetaSeries series_from_poly(const Poly& p, int K);
// num/den expanded by long division; den(0) must be nonzero.
ZetaSeries series_from_rational(const Poly& num, const Poly& den, int K);
ZetaSeries series_mul(const ZetaSeries& a, const ZetaSeries& b);
ZetaSeries series_inv(const ZetaSeries& a);
ZetaSeries series_div(const ZetaSeries& a, const ZetaSeries& b);
ZetaSeries series_pow(const ZetaSeries& a, long e);
// a^{num/den} for a(0) = 1, via exp(log(a) num/den).
ZetaSeries series_pow_rational(const ZetaSeries& a, long num, long den);
ZetaSeries series_truncate(const ZetaSeries& a, int K);
Poly series_to_poly(const ZetaSeries& a);

}  // namespace dwork
