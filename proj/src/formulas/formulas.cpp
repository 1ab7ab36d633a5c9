#include "dwork/formulas/formulas.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

#include "dwork/error.hpp"

namespace dwork {

namespace {

using Series = std::vector<long long>;  // coefficients 0..L

void mul_one_minus(Series& s, int e) {
    for (int j = static_cast<int>(s.size()) - 1; j >= e; --j) s[j] -= s[j - e];
}

void div_one_minus(Series& s, int e) {
    for (int j = e; j < static_cast<int>(s.size()); ++j) s[j] += s[j - e];
}

Series conv(const Series& a, const Series& b, int L) {
    Series c(L + 1, 0);
    for (int i = 0; i <= L && i < (int)a.size(); ++i)
        for (int j = 0; i + j <= L && j < (int)b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

void check_n(int n) {
    if (n < 2) throw InvalidArgument("n must be at least 2");
}

void check_ab(int n, int a, int b) {
    check_n(n);
    if (a < 0 || b < 0 || b > n) throw InvalidArgument("need a >= 0 and 0 <= b <= n");
}

void check_enum_cap(int n, int ab) {
    if (n > kEnumMaxN || ab > kEnumMaxAB)
        throw CapExceeded("enumeration limited to n <= " + std::to_string(kEnumMaxN) + ", a+b <= " + std::to_string(kEnumMaxAB));
}

// Gaussian binomial [n+a-1, a]_x = sum_k C_{n,a,k} x^k, truncated at L.
Series gaussian(int n, int a, int L) {
    Series s(L + 1, 0);
    s[0] = 1;
    for (int i = 1; i <= a; ++i) {
        mul_one_minus(s, n - 1 + i);
        div_one_minus(s, i);
    }
    return s;
}

// Row b of prod_{t<n} (1 + x^t z), truncated at L.
Series elementary_row(int n, int b, int L) {
    std::vector<Series> row(n + 1, Series(L + 1, 0));
    row[0][0] = 1;
    for (int t = 0; t < n; ++t)
        for (int bb = std::min(b, t + 1); bb >= 1; --bb)
            for (int j = L; j >= t; --j) row[bb][j] += row[bb - 1][j - t];
    return row[b];
}

template <class Key>
struct Memo {
    std::mutex mu;
    std::map<Key, Series> table;
};

void sums_nondecreasing(int n, int a, int lo, int acc, std::vector<int>& out) {
    if (a == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = lo; i < n; ++i) sums_nondecreasing(n, a - 1, i, acc + i, out);
}

void sums_increasing(int n, int b, int lo, int acc, std::vector<int>& out) {
    if (b == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = lo; i < n; ++i) sums_increasing(n, b - 1, i + 1, acc + i, out);
}

const Series& enum_hist(int n, int a, int b) {
    static Memo<std::tuple<int, int, int>> memo;
    std::lock_guard<std::mutex> lock(memo.mu);
    auto key = std::make_tuple(n, a, b);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
    std::vector<int> cs, bs;
    sums_nondecreasing(n, a, 0, 0, cs);
    sums_increasing(n, b, 0, 0, bs);
    Series h((a + b) * (n - 1) + 1, 0);
    for (int x : cs)
        for (int y : bs) ++h[x + y];
    return memo.table.emplace(key, std::move(h)).first->second;
}

long long at(const Series& s, int k) { return k >= 0 && k < (int)s.size() ? s[k] : 0; }

long long binom_ll_(long x, long y) { return binom_ll(x, y); }

}  // namespace

long long C_count_enum(int n, int a, int k) {
    check_ab(n, a, 0);
    check_enum_cap(n, a);
    return at(enum_hist(n, a, 0), k);
}

long long C_count_gf(int n, int a, int k) {
    check_ab(n, a, 0);
    if (k < 0) return 0;
    return gaussian(n, a, k)[k];
}

long long C_count(int n, int a, int k) {
    long long e = C_count_enum(n, a, k), g = C_count_gf(n, a, k);
    if (e != g) throw Mismatch("C count enumeration " + std::to_string(e) + " != generating function " + std::to_string(g));
    return g;
}

long long B_count_enum(int n, int b, int j) {
    check_ab(n, 0, b);
    check_enum_cap(n, b);
    return at(enum_hist(n, 0, b), j);
}

long long B_count_gf(int n, int b, int j) {
    check_ab(n, 0, b);
    if (j < 0) return 0;
    return elementary_row(n, b, j)[j];
}

long long B_count(int n, int b, int j) {
    long long e = B_count_enum(n, b, j), g = B_count_gf(n, b, j);
    if (e != g) throw Mismatch("B count enumeration " + std::to_string(e) + " != generating function " + std::to_string(g));
    return g;
}

long long N_count_enum(int n, int a, int b, int k) {
    check_ab(n, a, b);
    check_enum_cap(n, a + b);
    return at(enum_hist(n, a, b), k);
}

long long N_count_gf(int n, int a, int b, int k) {
    check_ab(n, a, b);
    if (k < 0) return 0;
    return conv(gaussian(n, a, k), elementary_row(n, b, k), k)[k];
}

long long N_count(int n, int a, int b, int k) {
    long long e = N_count_enum(n, a, b, k), g = N_count_gf(n, a, b, k);
    if (e != g) throw Mismatch("N count enumeration " + std::to_string(e) + " != generating function " + std::to_string(g));
    return g;
}

int infinity_top(int n, int a, int b) { return (a + b) * (n - 1) / 2; }

long long alpha(int n, int a, int b, int k) {
    check_ab(n, a, b);
    if (k < 0) return 0;
    Series br(k + 1, 0);
    br[0] = 1;
    if (a == 0) {
        mul_one_minus(br, 1);
    } else if (a == 1) {
        mul_one_minus(br, n);
    } else {
        for (int i = n; i <= a + n - 1; ++i) mul_one_minus(br, i);
        for (int i = 2; i <= a; ++i) div_one_minus(br, i);
    }
    long long g = conv(br, elementary_row(n, b, k), k)[k];
    long long diff = N_count_gf(n, a, b, k) - N_count_gf(n, a, b, k - 1);
    if (g != diff) throw Mismatch("alpha generating function disagrees with N differences");
    return g;
}

std::vector<long long> alpha_vector(int n, int a, int b) {
    std::vector<long long> v;
    for (int k = 0; k <= infinity_top(n, a, b); ++k) v.push_back(alpha(n, a, b, k));
    return v;
}

long long beta(int n, int b, int k) {
    check_ab(n, 0, b);
    if (k < 0) return 0;
    Series s = elementary_row(n, b, k);
    for (int i = 2; i <= n - 1; ++i) div_one_minus(s, i);
    long long other = beta_partitions_first(n, b, k);
    if (s[k] != other) throw Mismatch("beta expansions disagree");
    return s[k];
}

long long beta_partitions_first(int n, int b, int k) {
    check_ab(n, 0, b);
    if (k < 0) return 0;
    // partitions of j into parts 2..n-1, by choosing multiplicities
    Series parts(k + 1, 0);
    std::function<void(int, int)> rec = [&](int part, int acc) {
        if (part > n - 1) {
            ++parts[acc];
            return;
        }
        for (int s = acc; s <= k; s += part) rec(part + 1, s);
    };
    rec(2, 0);
    Series row = elementary_row(n, b, k);
    long long c = 0;
    for (int j = 0; j <= k; ++j) c += row[j] * parts[k - j];
    return c;
}

int delta(int n, int a, int b) {
    check_ab(n, a, b);
    if (n % 2 == 0) return ((a == 0 && b % 2 == 0) || (a == 1 && b % 2 == 1)) ? 1 : 0;
    return ((a % 2 == 0 && b == 0) || (a % 2 == 1 && b == 1)) ? 1 : 0;
}

long long d_even(int n, int a, int b, int i) {
    check_ab(n, a, b);
    if (n % 2) throw InvalidArgument("d(i) is defined for even n");
    auto M = [n](int j) -> long long {
        if (j < 0) return 0;
        if (n == 2) return j == 0 ? 1 : 0;
        return binom_ll_(n - 3 + j, j);
    };
    // U_{j+1} (x) U_2 = U_{j+2} + U_j: U_i receives Sym^{i-1}, Sym^i and
    // Sym^{i-2} of the unipotent block, the last only for i >= 2
    long long from_tensor = M(a - i) + (i >= 2 ? M(a - i + 2) : 0);
    return from_tensor * binom_ll_(n - 2, b - 1) + M(a - i + 1) * (binom_ll_(n - 2, b - 2) + binom_ll_(n - 2, b));
}

long long d_even_printed(int n, int a, int b, int i) {
    check_ab(n, a, b);
    return (binom_ll_(n - 3 + a - i, n - 3) + binom_ll_(n - 1 + a - i, n - 3)) * binom_ll_(n - 2, b - 1) +
           binom_ll_(n - 2 + a - i, n - 3) * (binom_ll_(n - 2, b - 2) + binom_ll_(n - 2, b));
}

long long D_local_printed(int n, int a, int b) {
    check_ab(n, a, b);
    if (n % 2) return D_local(n, a, b);
    return (binom_ll_(n - 3 + a, n - 2) + binom_ll_(n - 1 + a, n - 2)) * binom_ll_(n - 2, b - 1) +
           binom_ll_(n - 2 + a, n - 2) * (binom_ll_(n - 2, b - 2) + binom_ll_(n - 2, b));
}

std::map<int, long long> jordan_blocks(int n, int a, int b) {
    std::map<int, long long> m;
    for (int i = 1; i <= a + 2; ++i)
        if (long long d = d_even(n, a, b, i)) m[i] = d;
    return m;
}

long long D_local(int n, int a, int b) {
    check_ab(n, a, b);
    if (n % 2 == 0)
        return (binom_ll_(n - 3 + a, n - 2) + binom_ll_(n - 2 + a, n - 2)) * binom_ll_(n - 2, b - 1) +
               binom_ll_(n - 2 + a, n - 2) * (binom_ll_(n - 2, b - 2) + binom_ll_(n - 2, b));
    long long ev = 0, od = 0;
    for (int i = 0; i <= a; ++i) (i % 2 ? od : ev) += binom_ll_(n - 2 + a - i, n - 2);
    return binom_ll_(n - 1, b) * ev + binom_ll_(n - 1, b - 1) * od;
}

long long rank_G(int n, int a, int b) { return binom_ll_(n + a - 1, a) * binom_ll_(n, b); }

long long degP(int n, int a, int b) {
    check_n(n);
    if (b > n) return 0;
    check_ab(n, a, b);
    long long r = n * rank_G(n, a, b) + 2 * delta(n, a, b) - N_count_gf(n, a, b, infinity_top(n, a, b)) - (n + 1) * D_local(n, a, b);
    if (r < 0)
        throw NegativeDegree("degP(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ") = " + std::to_string(r));
    return r;
}

void TrivialFactorSpec::add(int i, long e) {
    if (e == 0) return;
    long& x = exps[i];
    x += e;
    if (x == 0) exps.erase(i);
}

long TrivialFactorSpec::signed_degree() const {
    long s = 0;
    for (auto& [i, e] : exps) s += e;
    return s;
}

long TrivialFactorSpec::num_degree() const {
    long s = 0;
    for (auto& [i, e] : exps) s += e > 0 ? e : 0;
    return s;
}

long TrivialFactorSpec::den_degree() const { return num_degree() - signed_degree(); }

Poly TrivialFactorSpec::numerator(const BigInt& q) const {
    Poly p = Poly::one();
    for (auto& [i, e] : exps)
        if (e > 0) p *= Poly::one_minus(BigRat(ipow(q, i))).pow(e);
    return p;
}

Poly TrivialFactorSpec::denominator(const BigInt& q) const {
    Poly p = Poly::one();
    for (auto& [i, e] : exps)
        if (e < 0) p *= Poly::one_minus(BigRat(ipow(q, i))).pow(-e);
    return p;
}

ZetaSeries TrivialFactorSpec::to_series(const BigInt& q, int K) const {
    auto s = series_from_rational(numerator(q), denominator(q), K);
    s.base_q = q;
    return s;
}

TrivialFactorSpec TrivialFactorSpec::inverse() const {
    TrivialFactorSpec t;
    for (auto& [i, e] : exps) t.exps[i] = -e;
    return t;
}

std::string TrivialFactorSpec::to_string() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, e] : exps) {
        if (!first) os << " ";
        first = false;
        os << "(1-q^" << i << "T)^" << e;
    }
    return os.str();
}

TrivialFactorSpec operator*(TrivialFactorSpec a, const TrivialFactorSpec& b) {
    for (auto& [i, e] : b.exps) a.add(i, e);
    return a;
}

int delta_d(int n, int d) {
    check_n(n);
    int s = 0;
    for (int b = 0; b <= n && b <= d; ++b) {
        int e = (b - 1) * ((b - 1) % 2 ? -1 : 1);
        s += e * delta(n, d - b, b);
    }
    return s;
}

namespace {

void add_half_power(TrivialFactorSpec& t, int twice_power, long e) {
    if (e == 0) return;
    if (twice_power % 2) throw HalfIntegerPower("q^{" + std::to_string(twice_power) + "/2} with exponent " + std::to_string(e));
    t.add(twice_power / 2, e);
}

void add_ratio_product(TrivialFactorSpec& t, int n, int d) {
    for (int k = 0; k <= (n - 2) / 2; ++k) {
        t.add(d * k, 1);
        t.add(d * k + 1, -1);
    }
}

int sgn_pow(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TrivialFactorSpec cohomology_trivial_part(int n, int d) {
    TrivialFactorSpec t;
    for (int i = 0; i <= n - 1; ++i) t.add(d * i + 1, sgn_pow(i + 1) * binom_ll_(n, i + 1));
    return t;
}

TrivialFactorSpec L_Fd_trivial_shape(int n, int d) {
    check_n(n);
    if (d < 1) throw InvalidArgument("d must be positive");
    const int w = d * (n - 1);
    TrivialFactorSpec t;
    add_half_power(t, w, (1 + sgn_pow(d + n)) / 2);
    add_half_power(t, w + 2, -((-sgn_pow(n) - sgn_pow(n + d)) / 2));
    add_ratio_product(t, n, d);
    return t;
}

TrivialFactorSpec L_Fd_four_case(int n, int d) {
    check_n(n);
    if (d < 1) throw InvalidArgument("d must be positive");
    const int w = d * (n - 1);
    TrivialFactorSpec t;
    add_ratio_product(t, n, d);
    if (n % 2 == 0 && d % 2 == 0) {
        add_half_power(t, w, 1);
        add_half_power(t, w + 2, 1);
    } else if (n % 2 == 1 && d % 2 == 0) {
        add_half_power(t, w + 2, -1);
    } else if (n % 2 == 1) {
        add_half_power(t, w, 1);
    }
    return t;
}

TrivialFactorSpec Q_d_trivial(int n, int d) { return L_Fd_trivial_shape(n, d) * cohomology_trivial_part(n, d); }

TrivialFactorSpec L_Fd_from_local_data(int n, int d) {
    check_n(n);
    if (d < 1) throw InvalidArgument("d must be positive");
    const int w = d * (n - 1);
    // multiplicity of q^k at infinity in the virtual [F]^d
    auto m = [&](int k) { return k >= 0 && k % d == 0 && k / d <= n - 1 ? 1 : 0; };
    TrivialFactorSpec t;
    for (int k = 0; k <= w / 2; ++k) t.add(k, m(k) - m(k - 1));
    const int dd = delta_d(n, d);
    add_half_power(t, w, -dd);
    add_half_power(t, w + 2, -dd);
    return t;
}

TrivialFactorSpec Q_d_from_local_data(int n, int d) { return L_Fd_from_local_data(n, d) * cohomology_trivial_part(n, d); }

DegreePrediction P_d_degree(int n, int d) {
    DegreePrediction p;
    for (int b = 0; b <= n && b <= d; ++b) {
        long e = (b - 1) * ((b - 1) % 2 ? -1L : 1L);
        long deg = degP(n, d - b, b);
        if (e > 0) p.num += e * deg;
        else p.den += -e * deg;
    }
    return p;
}

}  // namespace dwork
