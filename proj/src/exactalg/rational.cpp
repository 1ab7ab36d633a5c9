#include "dwork/exactalg/rational.hpp"

#include <algorithm>
#include <tuple>

#include "dwork/error.hpp"

namespace dwork {

RationalFunctionRF make_rational(const Poly& num, const Poly& den) {
    if (den.is_zero() || sgn(den[0]) == 0) throw InvalidArgument("make_rational: den(0) = 0");
    Poly g = gcd(num, den);
    Poly n = num, d = den;
    if (!g.is_zero() && g.degree() > 0) {
        n = divmod(num, g).first;
        d = divmod(den, g).first;
    }
    BigRat s = 1 / d[0];
    return {n * s, d * s, 0};
}

std::vector<BigRat> bareiss_solve(std::vector<std::vector<BigRat>> Arat, std::vector<BigRat> brat) {
    const std::size_t n = Arat.size();
    // scale each row to integers
    std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = brat[i].get_den();
        for (const auto& x : Arat[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Arat[i][j].get_num() * (l / Arat[i][j].get_den());
        M[i][n] = brat[i].get_num() * (l / brat[i].get_den());
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(M[piv][k]) == 0) ++piv;
        if (piv == n) throw SingularSystem("Hankel system is singular at column " + std::to_string(k));
        std::swap(M[piv], M[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                BigInt v = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = std::move(v);
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    std::vector<BigRat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        BigRat acc(M[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= BigRat(M[ii][j]) * x[j];
        x[ii] = acc / BigRat(M[ii][ii]);
    }
    return x;
}

RationalFunctionRF pade_reconstruct(const ZetaSeries& s, int l, int m, int slack) {
    if (l < 0 || m < 0) throw InvalidArgument("pade_reconstruct: negative degree bound");
    const int K = s.order();
    if (K < l + m + slack)
        throw InvalidArgument("pade_reconstruct: order " + std::to_string(K) + " below bounds " +
                              std::to_string(l) + "+" + std::to_string(m) + "+" + std::to_string(slack));
    auto c = [&](int i) { return i < 0 ? BigRat(0) : s[i]; };
    std::vector<BigRat> d(m + 1);
    d[0] = 1;
    if (m > 0) {
        std::vector<std::vector<BigRat>> A(m, std::vector<BigRat>(m));
        std::vector<BigRat> b(m);
        for (int r = 0; r < m; ++r) {
            int i = l + 1 + r;
            for (int j = 1; j <= m; ++j) A[r][j - 1] = c(i - j);
            b[r] = -c(i);
        }
        auto x = bareiss_solve(std::move(A), std::move(b));
        for (int j = 1; j <= m; ++j) d[j] = x[j - 1];
    }
    Poly den(d);
    ZetaSeries prod = series_mul(s, series_from_poly(den, K));
    std::vector<BigRat> nc(prod.coeffs.begin(), prod.coeffs.begin() + l + 1);
    for (int i = l + 1; i <= K; ++i)
        if (sgn(prod[i]) != 0)
            throw MismatchBeyondOrder("coefficient " + std::to_string(i) + " disagrees for bounds (" +
                                      std::to_string(l) + "," + std::to_string(m) + ")");
    RationalFunctionRF rf = make_rational(Poly(nc), den);
    rf.verified_to = K;
    return rf;
}

RationalFunctionRF pade_reconstruct_auto(const ZetaSeries& s, int max_num, int max_den, int slack) {
    std::vector<std::tuple<int, int, int>> cand;
    for (int l = 0; l <= max_num; ++l)
        for (int m = 0; m <= max_den; ++m)
            if (l + m + slack <= s.order()) cand.emplace_back(l + m, m, l);
    std::sort(cand.begin(), cand.end());
    for (auto [tot, m, l] : cand) {
        try {
            return pade_reconstruct(s, l, m, slack);
        } catch (const SingularSystem&) {
        } catch (const MismatchBeyondOrder&) {
        }
    }
    throw MismatchBeyondOrder("no rational function within bounds (" + std::to_string(max_num) + "," +
                              std::to_string(max_den) + ") matches to order " + std::to_string(s.order()));
}

}  // namespace dwork
