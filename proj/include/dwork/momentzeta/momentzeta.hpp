#pragma once
// Moment zeta functions Z_d and the L-functions of Sym^a (x) wedge^b of the
// fiber cohomology, assembled from point counts and split into trivial and
// pure parts.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dwork/config.hpp"
#include "dwork/counting/counting.hpp"
#include "dwork/exactalg/rational.hpp"
#include "dwork/exactalg/series.hpp"
#include "dwork/formulas/formulas.hpp"

namespace dwork {

struct PurityEntry {
    std::string part;  // "num" or "den"
    long double magnitude = 0;
    long double expected = 0;
    long double rel_error = 0;
};

struct Cor12Entry {
    int k = 0;
    BigInt N;
    BigRat main_term;
    BigRat deviation;  // |N - main|
    int D = 0;
    bool holds = false;
};

struct CongruencePartner {
    int d2 = 0;
    int m = 0;
    BigInt modulus;
    int verified = 0;
};

struct MomentReport {
    int n = 0, p = 0, m0 = 0, d = 0, K = 0;
    BigInt q;
    MomentMethod method = MomentMethod::Auto;
    std::vector<BigInt> counts;
    ZetaSeries Zd;
    TrivialFactorSpec Qd;          // rebuilt from local data; the one divided out
    TrivialFactorSpec Qd_display;  // as displayed in the factorization theorem
    // Bad fibers count through p_d of the inertia invariants, while the
    // Sym^a (x) wedge^b pieces extend through their own invariants. The
    // difference is exp(sum_k bad_sums[k-1] T^k / k), divided out with Q_d.
    std::vector<BigRat> bad_sums;
    ZetaSeries bad_factor;
    RationalFunctionRF Pd;
    DegreePrediction predicted;
    int observed_num = 0, observed_den = 0;
    bool degree_exact = false;  // observed degrees equal the prediction
    int budget = 0;
    std::vector<PurityEntry> purity;
    long double max_purity_error = 0;
    int fe_sign_num = 0, fe_sign_den = 0;
    bool factorization_ok = false;
    std::vector<Cor12Entry> cor12;
    std::vector<CongruencePartner> congruence_partners;
    std::vector<std::string> fields_used;

    int observed_total() const { return observed_num + observed_den; }
};

// num + den of the predicted P_d plus 2.
int moment_budget(int n, int d);

// Censuses at levels k = 1..K with enough sub-levels for the fiber
// characteristic polynomials. Reused across d and (a, b).
std::vector<LevelCensus> census_levels(int n, std::uint64_t q, int K, const RunConfig& cfg);

// K = 0 picks the budget. Censuses, when given, must cover levels 1..K.
MomentReport run_moment(int n, std::uint64_t q, int d, int K, MomentMethod method, const RunConfig& cfg,
                        const std::vector<LevelCensus>* census = nullptr);

// Z_{d1} = Z_{d2} mod p^{m+1} coefficientwise to order K; returns K.
int congruence_check(int n, std::uint64_t q, int d1, int d2, int m, int K, const RunConfig& cfg,
                     const std::vector<LevelCensus>* census = nullptr);
bool congruence_hypotheses(int n, int p, int d1, int d2, int m);

// sum over bad lambda in F_{q^k} of p_d(F^I) - sum_{a+b=d} (-1)^{b-1}(b-1) tr(G_{a,b}^I)
BigRat bad_fiber_defect(const LevelCensus& c, int d);

// Characteristic polynomial of Sym^j V (x) wedge^k V from that of V.
Poly tensor_charpoly(const Poly& cp, int j, int k);

// det(1 - Frob T | G_{a,b}^I) at a bad fiber whose cp is the inertia
// invariant part of F there.
Poly bad_local_factor(int n, const BigInt& q, const Poly& cp, int a, int b);

struct GabReport {
    int n = 0, a = 0, b = 0, K = 0;
    BigInt q;
    std::vector<BigRat> S;  // S_k over U(F_{q^k})
    ZetaSeries L;
    Poly Q_obs;             // product of local factors at the n+1 bad points
    RationalFunctionRF R;   // L (1 - q^{w/2}T)^delta (1 - q^{w/2+1}T)^delta / Q_obs
    RationalFunctionRF L_rf;
    long predicted_total = 0, observed_total = 0;
    int delta = 0;
    std::vector<long long> alpha_pred, alpha_obs;
    long long D_pred = 0, D_obs = 0;
    long long degP_pred = 0;
    Poly P;
    int degP_obs = -1;
    bool P_polynomial = false;
    long double purity_error = 0;
    int fe_sign = 0;
    std::vector<std::string> fields_used;

    bool ok(long double tol = 1e-6L) const;
};

// n in {2, 3}, p not dividing n+1 and (n+1) | (q-1). K = 0 picks the budget.
GabReport run_gab(int n, std::uint64_t q, int a, int b, int K, const RunConfig& cfg,
                  const std::vector<LevelCensus>* census = nullptr);
int gab_budget(int n, int a, int b);

struct Prop31Report {
    int n = 0, K = 0;
    BigInt q;
    std::vector<BigRat> S;
    ZetaSeries L;
    Poly P;
    std::vector<Poly> bad_charpolys;
    bool matches_bad_fibers = false;
    long double purity_error = 0;
    std::vector<long double> root_magnitudes;
};

// L(U, F) = (1 - T) P(T)^{n+1}, P of degree n-1, by exact (n+1)-th root.
Prop31Report prop31_check(int n, std::uint64_t q, int K, const RunConfig& cfg);

}  // namespace dwork
