#pragma once
// Rational functions recovered from truncated series.

#include "dwork/exactalg/polynomial.hpp"
#include "dwork/exactalg/series.hpp"

namespace dwork {

struct RationalFunctionRF {
    Poly num;
    Poly den;         // den(0) = 1, gcd(num, den) = 1
    int verified_to = 0;

    int signed_degree() const { return num.degree() - den.degree(); }
    ZetaSeries series(int K) const { return series_from_rational(num, den, K); }
};

// num/den normalised to den(0) = 1 with common factors removed.
RationalFunctionRF make_rational(const Poly& num, const Poly& den);

// Solves the Hankel system for den by fraction-free elimination, then checks
// every remaining coefficient up to series.order().
RationalFunctionRF pade_reconstruct(const ZetaSeries& series, int deg_num, int deg_den, int slack = 2);

// Smallest (deg_num + deg_den, then deg_den) pair within the bounds that
// reconstructs and verifies.
RationalFunctionRF pade_reconstruct_auto(const ZetaSeries& series, int max_num, int max_den, int slack = 2);

// Solves A x = b over Q; A given row-major n x n. Throws SingularSystem.
std::vector<BigRat> bareiss_solve(std::vector<std::vector<BigRat>> A, std::vector<BigRat> b);

}  // namespace dwork
