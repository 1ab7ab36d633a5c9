#include <gtest/gtest.h>

#include "dwork/error.hpp"
#include "dwork/exactalg/roots.hpp"
#include "dwork/zeta0/zeta0.hpp"

using namespace dwork;

TEST(ZetaX0, EmptyOrbitSet) {
    auto r = zeta_X0(2, 3);
    EXPECT_EQ(r.m, 1);
    EXPECT_EQ(r.a, 2);
    EXPECT_TRUE(r.orbits.orbits.empty());
    EXPECT_EQ(r.nontrivial, Poly::one());
    // (1-2T)^3 / ((1-T)^3 (1-4T)), from N_{2^k}(0) = 4^k - 3 2^k + 3
    std::vector<BigInt> N;
    for (int k = 1; k <= 5; ++k) N.push_back(ipow(4, k) - 3 * ipow(2, k) + 3);
    auto expect = series_from_rational(poly_from_ints({1, -2}).pow(3), poly_from_ints({1, -1}).pow(3) * poly_from_ints({1, -4}), 5);
    EXPECT_EQ(series_exp_from_counts(N), expect);
    EXPECT_EQ(r.zeta_series(5), expect);
    EXPECT_EQ(validate_zeta_X0(r, 5), 0);
}

TEST(ZetaX0, OneOrbitOverF3) {
    auto r = zeta_X0(3, 5);
    EXPECT_EQ(r.m, 2);
    ASSERT_EQ(r.factors.size(), 1u);
    EXPECT_EQ(r.factors[0].orbit.length, 1);
    EXPECT_EQ(r.nontrivial, poly_from_ints({1, 9}));
    EXPECT_EQ(validate_zeta_X0(r, 4), 0);
}

TEST(ZetaX0, OrbitOfLengthTwo) {
    auto r = zeta_X0(2, 5);
    EXPECT_EQ(r.m, 3);
    ASSERT_EQ(r.factors.size(), 1u);
    EXPECT_EQ(r.factors[0].orbit.length, 2);
    EXPECT_EQ(r.nontrivial.degree(), 2);
    EXPECT_EQ(validate_zeta_X0(r, 6), 0);
}

TEST(ZetaX0, DegreeIsMMinusOneAndPure) {
    for (auto [p, n] : {std::pair{2, 7}, {5, 4}, {3, 3}, {7, 2}, {5, 5}, {3, 6}, {2, 6}}) {
        auto r = zeta_X0(p, n);
        EXPECT_EQ(r.nontrivial.degree(), r.m - 1) << p << " " << n;
        if (r.nontrivial.degree() > 0)
            EXPECT_LT(max_relative_deviation(r.nontrivial, std::pow((long double)p, (n - 1) / 2.0L)), 1e-6L);
        EXPECT_EQ(validate_zeta_X0(r, 3), 0) << p << " " << n;
    }
}

TEST(ZetaX0, CharacterChoiceDoesNotMatter) {
    for (auto [p, n] : {std::pair{2, 5}, {2, 4}, {3, 7}}) {
        RunConfig a, b;
        b.seed = 9;
        EXPECT_EQ(zeta_X0(p, n, a).nontrivial, zeta_X0(p, n, b).nontrivial) << p << " " << n;
    }
}

TEST(ZetaX0, OrbitFieldCap) {
    RunConfig c;
    c.field_cap = 16;
    // m = 11 at p = 2 has orbits of length 10
    EXPECT_THROW(zeta_X0(2, 10, c), OrbitFieldCapExceeded);
}
