#pragma once
// Zeta function of the fiber X_0 over F_p from p-orbits of S_m and Gauss sums.

#include <string>
#include <vector>

#include "dwork/charsums/orbits.hpp"
#include "dwork/config.hpp"
#include "dwork/exactalg/polynomial.hpp"
#include "dwork/exactalg/series.hpp"
#include "dwork/formulas/formulas.hpp"

namespace dwork {

struct OrbitFactor {
    Orbit orbit;
    std::int64_t index = 0;     // r (p^d - 1)
    std::string G_re, G_im;     // G_{p^d}(index)
    std::string c_re, c_im;     // G^{n+1} / p^d
    long double magnitude = 0;  // |c|
    long double expected = 0;   // p^{d(n-1)/2}
    long double rel_error = 0;
    std::string field;          // description of F_{p^d}
};

struct ZetaX0Report {
    int p = 0, n = 0, a = 0, m = 1;
    int bits = 128;
    std::uint64_t seed = 0;
    // Z(X_0,T)^{(-1)^n} = trivial * nontrivial
    TrivialFactorSpec trivial;  // prod (1 - p^i T)^{C(n,i+1)(-1)^i}
    Poly nontrivial;
    OrbitSet orbits;
    std::vector<OrbitFactor> factors;
    long double rounding_error = 0;  // largest |coefficient - rounded| relative to 1 + |coefficient|

    // Z(X_0,T) itself as a series to order K.
    ZetaSeries zeta_series(int K) const;
};

ZetaX0Report zeta_X0(int p, int n, const RunConfig& cfg = RunConfig{});
// Compares against exp(sum N_{p^k}(0) T^k / k) with counts from brute force
// or the Gauss-sum formula over F_{p^k}; throws Mismatch, returns 0 on success.
BigRat validate_zeta_X0(const ZetaX0Report& report, int K, const RunConfig& cfg = RunConfig{});
// The counts used by validate_zeta_X0.
std::vector<BigInt> zero_fiber_counts(int p, int n, int K, const RunConfig& cfg = RunConfig{});

}  // namespace dwork
