#pragma once
// Point counts on X_lambda : x_1 + ... + x_n + 1/(x_1 ... x_n) = lambda.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dwork/charsums/gauss.hpp"
#include "dwork/config.hpp"
#include "dwork/exactalg/bigrat.hpp"
#include "dwork/exactalg/polynomial.hpp"
#include "dwork/ffield/field.hpp"

namespace dwork {

enum class CountMethod { Brute, Gauss };
inline const char* to_string(CountMethod m) { return m == CountMethod::Brute ? "brute" : "gauss"; }

struct FiberCount {
    FFElem lambda;
    int p = 0;
    int e = 0;  // the count is over F_{p^e}
    std::uint64_t q = 0;
    int n = 0;
    BigInt N;
    CountMethod method = CountMethod::Brute;
};

// Index of lambda in FieldView::elements() order: 0 for zero, else 1 + dlog.
std::uint64_t view_index(const FieldView& v, FFElem x);

// (q-1)^n, throwing CapExceeded if it does not fit comfortably in 62 bits.
std::int64_t torus_size(std::uint64_t q, int n);

FiberCount count_bruteforce(const FieldView& v, int n, FFElem lambda, std::uint64_t work_cap = 1000000000ULL);
// Counts for every lambda of the view by one enumeration of the torus.
std::vector<std::int64_t> bruteforce_all_fibers(const FieldView& v, int n, std::uint64_t work_cap = 1000000000ULL);

// N = ((q-1)^n - (-1)^n)/q + (-1)^n/(q-1) + (-1)^n/(q(q-1)) sum G(a)^{n+1} G(b) omega(-lambda)^b
// over (n+1)a + b = 0 mod q-1, (a,b) != (0,0).
template <class Real>
FiberCount count_gauss(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n, FFElem lambda);
// N(0) = ((q-1)^n - (-1)^n)/q + ((-1)^{n+1}/q) sum_{1<=k<=q-2, mk = 0 mod q-1} G(k)^{n+1}, n+1 = p^a m.
template <class Real>
FiberCount count_gauss_zero(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n);
// Every lambda at once: the sum over b is a length-(q-1) DFT in dlog(-lambda).
template <class Real>
std::vector<std::int64_t> gauss_all_fibers(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n);

// Dispatches on size and precision (retrying at doubled precision).
std::vector<std::int64_t> all_fiber_counts(const FieldView& v, int n, const RunConfig& cfg, CountMethod* used = nullptr);
FiberCount count_fiber(const FieldView& v, int n, FFElem lambda, const RunConfig& cfg, CountMethod method);

// S_triv(q) = sum_{j=n}^{2n-2} (-1)^j C(n, j-n+2) q^{j-n+1}
BigInt s_triv(int n, const BigInt& q);
// t = (-1)^{n-1}(N - S_triv(q)) - n
BigRat frob_trace(int n, const BigInt& q_level, const BigInt& N);
// Inverse of frob_trace: the count predicted from a trace.
BigInt count_from_trace(int n, const BigInt& q_level, const BigInt& t);

enum class FiberKind { Good, Bad, ZeroWild };
const char* to_string(FiberKind k);

FiberKind classify_fiber(const FieldView& v, int n, FFElem lambda);
// Sign of det(Frob) / q^{n(n-1)/2}: 1 for n even or p | n+1, else chi(lambda^{n+1} - (n+1)^{n+1}).
int det_sign(const FieldView& v, int n, FFElem lambda);

struct FrobeniusData {
    FFElem lambda;
    BigInt level_q;
    int n = 0;
    Poly cp;  // prod (1 - alpha_i T)
    FiberKind kind = FiberKind::Good;
};

// counts[j-1] = #X_lambda(F_{q^j}). Good fibers need n-1 levels (the
// determinant fixes the top coefficient); with n levels the determinant is
// checked instead. Bad fibers need n-1 levels.
FrobeniusData fiber_charpoly(int n, const BigInt& q, FiberKind kind, int det_sign, const std::vector<BigInt>& counts,
                             bool check_purity = true, int bits = 128);
FrobeniusData fiber_charpoly(const FieldView& v, int n, FFElem lambda, const std::vector<BigInt>& counts,
                             bool check_purity = true, int bits = 128);

// Throws PurityViolation unless cp has the shape allowed for its kind.
void check_fiber_purity(int n, const BigInt& q, FiberKind kind, const Poly& cp, int bits = 128);

// All lambda in F_{q^k} (q = p^m0) with their counts over F_{q^{kj}}, j = 1..J,
// computed inside one field F_{q^{k lcm(1..J)}}.
struct LevelCensus {
    int n = 0, p = 0, m0 = 0, k = 0, J = 0;
    BigInt Q;  // q^k
    std::shared_ptr<const FieldCtx> field;
    std::vector<FFElem> lambdas;                  // FieldView(field, m0 k).elements()
    std::vector<FiberKind> kinds;
    std::vector<int> det_signs;
    std::vector<std::vector<std::int64_t>> counts;  // counts[j-1][i]
    std::vector<CountMethod> methods;               // per level j

    std::vector<BigInt> counts_of(std::size_t i) const;
    FrobeniusData frobenius(std::size_t i, bool check_purity = false, int bits = 128) const;
};

LevelCensus build_census(int n, int p, int m0, int k, int J, const RunConfig& cfg);

enum class MomentMethod { Direct, Charpoly, Both, Auto };
const char* to_string(MomentMethod m);
MomentMethod parse_moment_method(const std::string& s);

struct MomentSeriesSpec {
    int n = 0, p = 0, m0 = 0, d = 0, K = 0;
    BigInt q;
    MomentMethod method = MomentMethod::Auto;
    std::vector<BigInt> counts;            // N_d(1..K)
    std::vector<std::string> fields_used;  // descriptions for provenance
};

// N_d(k) = sum_{lambda in F_{q^k}} #X_lambda(F_{q^{dk}})
MomentSeriesSpec moment_counts(int n, std::uint64_t q, int d, int K, MomentMethod method, const RunConfig& cfg);
// Same from precomputed censuses (charpoly method), one per level k = 1..K.
std::vector<BigInt> moment_counts_from_census(const std::vector<LevelCensus>& census, int d);

}  // namespace dwork
