#include <random>

#include <gtest/gtest.h>

#include "dwork/error.hpp"
#include "dwork/exactalg/charpoly.hpp"
#include "dwork/exactalg/rational.hpp"
#include "dwork/exactalg/roots.hpp"
#include "dwork/exactalg/series.hpp"

using namespace dwork;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Coefficients of the product of plain lists, no truncation helpers.
std::vector<BigRat> convolve(const std::vector<BigRat>& a, const std::vector<BigRat>& b, int K) {
    std::vector<BigRat> c(K + 1, BigRat(0));
    for (int i = 0; i <= K && i < (int)a.size(); ++i)
        for (int j = 0; i + j <= K && j < (int)b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST(SeriesExp, PointZetaIsGeometric) {
    auto z = series_exp_from_counts(ints({1, 1, 1, 1, 1, 1}));
    ASSERT_EQ(z.order(), 6);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(z[k], 1);
}

TEST(SeriesExp, AffineLineZeta) {
    std::vector<BigInt> N;
    for (int k = 1; k <= 7; ++k) N.push_back(ipow(5, k));
    auto z = series_exp_from_counts(N);
    for (int k = 0; k <= 7; ++k) EXPECT_EQ(z[k], BigRat(ipow(5, k)));
}

TEST(SeriesExp, ZetaOfX0AtTwoThree) {
    // 1/(1-T)^3 = sum C(k+2,2) T^k and 1/(1-4T) = sum 4^k T^k, times (1-2T)^3
    const int K = 4;
    std::vector<BigInt> N;
    for (int k = 1; k <= K; ++k) N.push_back(ipow(2, 2 * k) - 3 * ipow(2, k) + 3);
    auto z = series_exp_from_counts(N);
    std::vector<BigRat> a, b, c = {1, -6, 12, -8};
    for (int k = 0; k <= K; ++k) {
        a.emplace_back(binom(k + 2, 2));
        b.emplace_back(ipow(4, k));
    }
    auto expect = convolve(convolve(a, b, K), c, K);
    for (int k = 0; k <= K; ++k) EXPECT_EQ(z[k], expect[k]) << k;
}

TEST(SeriesExp, LogRoundTrip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigInt> N;
        for (int k = 0; k < 9; ++k) N.emplace_back(static_cast<long>(rng() % 2001) - 1000);
        auto back = series_log_counts(series_exp_from_counts(N));
        ASSERT_EQ(back.size(), N.size());
        for (std::size_t k = 0; k < N.size(); ++k) EXPECT_EQ(back[k], BigRat(N[k]));
    }
}

TEST(SeriesArith, PowRationalInvertsPow) {
    ZetaSeries s = series_from_poly(poly_from_ints({1, -3, 7}), 10);
    auto cube = series_pow(s, 3);
    auto root = series_pow_rational(cube, 1, 3);
    EXPECT_EQ(root, s);
    auto inv = series_pow(s, -2);
    EXPECT_EQ(series_mul(inv, series_pow(s, 2)), series_one(10));
}

TEST(Pade, GeometricSeries) {
    auto s = series_from_rational(Poly::one(), Poly::one_minus(BigRat(7)), 6);
    auto rf = pade_reconstruct(s, 0, 1);
    EXPECT_EQ(rf.num, Poly::one());
    EXPECT_EQ(rf.den, Poly::one_minus(BigRat(7)));
    EXPECT_EQ(rf.verified_to, 6);
}

TEST(Pade, ConstructedInput) {
    Poly num = poly_from_ints({1, -1});
    Poly den = Poly::one_minus(BigRat(2)) * Poly::one_minus(BigRat(3));
    auto rf = pade_reconstruct(series_from_rational(num, den, 8), 1, 2);
    EXPECT_EQ(rf.num, num);
    EXPECT_EQ(rf.den, den);
}

TEST(Pade, MismatchBeyondOrderIsHard) {
    Poly den = Poly::one_minus(BigRat(2)) * Poly::one_minus(BigRat(3));
    auto s = series_from_rational(Poly::one(), den, 8);
    EXPECT_THROW(pade_reconstruct(s, 0, 1), MismatchBeyondOrder);
}

TEST(Pade, RandomRationalFunctionsProperty) {
    std::mt19937_64 rng(2024);
    auto rnd = [&] { return static_cast<long long>(rng() % 2001) - 1000; };
    for (int trial = 0; trial < 40; ++trial) {
        int dn = rng() % 7, dd = rng() % 7;
        std::vector<long long> a(dn + 1), b(dd + 1);
        for (auto& x : a) x = rnd();
        for (auto& x : b) x = rnd();
        a[0] = a[0] == 0 ? 1 : a[0];
        b[0] = 1;
        if (dn > 0 && a[dn] == 0) a[dn] = 1;
        if (dd > 0 && b[dd] == 0) b[dd] = 1;
        Poly num = poly_from_ints(a), den = poly_from_ints(b);
        auto s = series_from_rational(num, den, dn + dd + 3);
        auto rf = pade_reconstruct_auto(s, dn, dd);
        EXPECT_EQ(rf.num * den, num * rf.den) << trial;
        EXPECT_EQ(rf.den[0], 1);
    }
}

TEST(Bareiss, SingularThrows) {
    std::vector<std::vector<BigRat>> A = {{1, 2}, {2, 4}};
    EXPECT_THROW(bareiss_solve(A, {1, 2}), SingularSystem);
    auto x = bareiss_solve({{2, 1}, {1, 3}}, {3, 5});
    EXPECT_EQ(x[0], BigRat(4, 5));
    EXPECT_EQ(x[1], BigRat(7, 5));
}

TEST(Newton, QuadraticWithDeterminant) {
    auto cp = power_sums_to_charpoly({BigRat(3)}, 2, BigRat(7));
    EXPECT_EQ(cp, poly_from_ints({1, -3, 7}));
    EXPECT_EQ(power_sums_to_charpoly({BigRat(-1)}, 1), poly_from_ints({1, 1}));
}

TEST(Newton, InconsistentDeterminant) {
    // roots 1, 2: p1 = 3, p2 = 5, det 2
    EXPECT_NO_THROW(power_sums_to_charpoly({BigRat(3), BigRat(5)}, 2, BigRat(2)));
    EXPECT_THROW(power_sums_to_charpoly({BigRat(3), BigRat(5)}, 2, BigRat(3)), InconsistentDet);
}

TEST(Newton, PowerSumExamples) {
    EXPECT_EQ(charpoly_power_sum(poly_from_ints({1, -5, 7}), 2), BigRat(25 - 14));
    EXPECT_EQ(charpoly_power_sum(poly_from_ints({1, -1}), 7), 1);
}

TEST(Newton, MutuallyInverseOnIntegerRoots) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + rng() % 5;
        Poly cp = Poly::one();
        std::vector<long long> roots;
        for (int i = 0; i < r; ++i) {
            long long a = static_cast<long long>(rng() % 19) - 9;
            roots.push_back(a);
            cp *= poly_from_ints({1, -a});
        }
        // power sums straight from the roots
        std::vector<BigRat> p;
        for (int d = 1; d <= r; ++d) {
            BigInt s = 0;
            for (long long a : roots) s += ipow(BigInt(std::to_string(a)), d);
            p.emplace_back(s);
        }
        EXPECT_EQ(charpoly_power_sums(cp, r), p);
        EXPECT_EQ(power_sums_to_charpoly(p, r), cp);
    }
}

TEST(Newton, SymmetricFunctions) {
    // roots 2, 3: h_2 = 4 + 6 + 9
    Poly cp = poly_from_ints({1, -2}) * poly_from_ints({1, -3});
    EXPECT_EQ(complete_from_charpoly(cp, 3)[2], 19);
    EXPECT_EQ(elementary_from_charpoly(cp, 3)[2], 6);
    EXPECT_EQ(charpoly_adams(cp, 2), poly_from_ints({1, -4}) * poly_from_ints({1, -9}));
}

TEST(Roots, LinearAndWeilPair) {
    auto r = root_magnitudes(poly_from_ints({1, -7}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR((double)r[0].magnitude, 1.0 / 7, 1e-15);
    // |t| <= 2 sqrt(q): both roots on |T| = q^{-1/2}
    auto w = root_magnitudes(poly_from_ints({1, -3, 7}));
    for (auto& x : w) EXPECT_NEAR((double)x.magnitude, 1 / std::sqrt(7.0), 1e-14);
}

TEST(Roots, ProductIsUnionWithinBounds) {
    Poly P = poly_from_ints({1, 4, 13});
    Poly Q = poly_from_ints({1, -2, 7}) * poly_from_ints({1, 1});
    auto mp = root_magnitudes(P), mq = root_magnitudes(Q), mpq = root_magnitudes(P * Q);
    std::vector<RootEstimate> uni = mp;
    uni.insert(uni.end(), mq.begin(), mq.end());
    auto key = [](const RootEstimate& a, const RootEstimate& b) { return a.magnitude < b.magnitude; };
    std::sort(uni.begin(), uni.end(), key);
    std::sort(mpq.begin(), mpq.end(), key);
    ASSERT_EQ(uni.size(), mpq.size());
    for (std::size_t i = 0; i < uni.size(); ++i)
        EXPECT_LE(std::fabs(uni[i].magnitude - mpq[i].magnitude), uni[i].error_bound + mpq[i].error_bound + 1e-30L);
}

TEST(Roots, DoubleRootHasUsableBound) {
    Poly cp = poly_from_ints({1, -5}).pow(2) * poly_from_ints({1, 2, 5});
    for (auto& r : root_magnitudes(cp)) EXPECT_LT(r.error_bound, 1e-12L);
    EXPECT_LT(max_relative_deviation(poly_from_ints({1, -5}).pow(3), 5), 1e-12L);
}

TEST(FunctionalEquation, Signs) {
    // 1 - qT: T q (1 - q/(q^2 T)) = -(1 - qT)
    EXPECT_EQ(functional_equation_check(poly_from_ints({1, -7}), 2, 7), -1);
    // (1 - aT)(1 - (q^w/a)T), a = 3, q^w = 27
    EXPECT_EQ(functional_equation_check(poly_from_ints({1, -3}) * poly_from_ints({1, -9}), 3, 3), 1);
    EXPECT_EQ(functional_equation_check(poly_from_ints({1, 7}), 2, 7), 1);
    EXPECT_EQ(functional_equation_check(poly_from_ints({1, -3, 7}), 1, 7), 1);
    EXPECT_THROW(functional_equation_check(poly_from_ints({1, -3}), 1, 7), NoFunctionalEquation);
    EXPECT_THROW(functional_equation_check(poly_from_ints({1, -2, 5}), 1, 7), NoFunctionalEquation);
}
