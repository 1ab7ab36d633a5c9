#pragma once
// Combinatorial counts, local degrees and trivial factors of the moment
// L-functions.

#include <map>
#include <string>
#include <vector>

#include "dwork/exactalg/bigrat.hpp"
#include "dwork/exactalg/polynomial.hpp"
#include "dwork/exactalg/series.hpp"

namespace dwork {

// Enumeration limits for the lattice-point paths.
inline constexpr int kEnumMaxN = 8;
inline constexpr int kEnumMaxAB = 16;

// C_{n,a,k}: nondecreasing (i_1..i_a) in [0,n-1] with sum k.
long long C_count_enum(int n, int a, int k);
long long C_count_gf(int n, int a, int k);
long long C_count(int n, int a, int k);  // both, Mismatch on disagreement
// B_{n,b,j}: strictly increasing (j_1..j_b) in [0,n-1] with sum j.
long long B_count_enum(int n, int b, int j);
long long B_count_gf(int n, int b, int j);
long long B_count(int n, int b, int j);
// N_{n,a,b,k} = sum_j C_{n,a,k-j} B_{n,b,j}
long long N_count_enum(int n, int a, int b, int k);
long long N_count_gf(int n, int a, int b, int k);
long long N_count(int n, int a, int b, int k);

// c = floor((a+b)(n-1)/2)
int infinity_top(int n, int a, int b);

// Coefficient of x^k z^b in {bracket}(1+z)(1+xz)...(1+x^{n-1}z); checked
// against N_{k} - N_{k-1}.
long long alpha(int n, int a, int b, int k);
std::vector<long long> alpha_vector(int n, int a, int b);  // k = 0..c

// Coefficient of x^k z^b in (1+z)...(1+x^{n-1}z)/((1-x^2)...(1-x^{n-1})),
// by two expansion orders that must agree.
long long beta(int n, int b, int k);
long long beta_partitions_first(int n, int b, int k);

int delta(int n, int a, int b);

// Even n: d(i), i = 1..a+2, the multiplicity of U_i in Sym^a F (x) wedge^b F
// at a bad point, where F = U_2 + 1^{n-2}. Sym^j of the trivial part has
// dimension C(n-3+j, j), which is 1 at j = 0 also for n = 2.
long long d_even(int n, int a, int b, int i);
std::map<int, long long> jordan_blocks(int n, int a, int b);
// Degree of the local factor at a bad point (closed forms, both parities).
long long D_local(int n, int a, int b);
// The even-n d(i) and D as printed, whose i = 1 term also counts U_{i+2}
// with i = -1; kept to show where they disagree with the block count.
long long d_even_printed(int n, int a, int b, int i);
long long D_local_printed(int n, int a, int b);

long long rank_G(int n, int a, int b);  // C(n+a-1,a) C(n,b)
// n C(n+a-1,a) C(n,b) + 2 delta - N_{n,a,b,c} - (n+1) D; 0 for b > n.
long long degP(int n, int a, int b);

// prod_i (1 - q^i T)^{e_i}
struct TrivialFactorSpec {
    std::map<int, long> exps;

    void add(int i, long e);
    long signed_degree() const;
    long num_degree() const;
    long den_degree() const;
    Poly numerator(const BigInt& q) const;
    Poly denominator(const BigInt& q) const;
    ZetaSeries to_series(const BigInt& q, int K) const;
    TrivialFactorSpec inverse() const;
    std::string to_string() const;
    friend TrivialFactorSpec operator*(TrivialFactorSpec a, const TrivialFactorSpec& b);
    friend bool operator==(const TrivialFactorSpec& a, const TrivialFactorSpec& b) { return a.exps == b.exps; }
};

// delta_d = sum_{b=0..n, d-b>=0} (-1)^{b-1}(b-1) delta(n, d-b, b)
int delta_d(int n, int d);

// The trivial factor exactly as displayed in the factorization theorem.
TrivialFactorSpec Q_d_trivial(int n, int d);
// The unified trivial shape of L(A^1, [F]^d)/P_d.
TrivialFactorSpec L_Fd_trivial_shape(int n, int d);
// The same corollary's four parity cases, spelled out separately.
TrivialFactorSpec L_Fd_four_case(int n, int d);
// prod_{i=0}^{n-1} (1 - q^{di+1}T)^{(-1)^{i+1} C(n,i+1)}
TrivialFactorSpec cohomology_trivial_part(int n, int d);
// Trivial factor rebuilt from local data: the infinity factor from the
// multiplicities of q^{jd} (j < n), the H^0/H^2 correction delta_d, and the
// cohomology part.
TrivialFactorSpec L_Fd_from_local_data(int n, int d);
TrivialFactorSpec Q_d_from_local_data(int n, int d);

struct DegreePrediction {
    long num = 0;  // sum of positive-exponent degP
    long den = 0;
    long total() const { return num + den; }
    long signed_degree() const { return num - den; }
};
// P_d = prod_{a+b=d, 0<=b<=n, a>=0} P_{a,b}^{(-1)^{b-1}(b-1)}
DegreePrediction P_d_degree(int n, int d);

}  // namespace dwork
