#include <gtest/gtest.h>

#include "dwork/counting/counting.hpp"
#include "dwork/error.hpp"
#include "dwork/exactalg/charpoly.hpp"

using namespace dwork;

namespace {

RunConfig cfg() {
    RunConfig c;
    c.brute_bulk_limit = 0;  // force the Gauss path unless a test says otherwise
    return c;
}

// Plain enumeration over (F_q^*)^n with nothing shared with the library's enumerator.
long naive_count(const FieldCtx& F, int n, FFElem lambda) {
    std::vector<FFElem> units;
    for (std::uint32_t c = 1; c < F.q; ++c) units.push_back({c});
    std::vector<std::size_t> idx(n, 0);
    long hits = 0;
    while (true) {
        FFElem s = F.zero(), prod = F.one();
        for (int i = 0; i < n; ++i) {
            s = F.add(s, units[idx[i]]);
            prod = F.mul(prod, units[idx[i]]);
        }
        if (F.add(s, F.inv(prod)) == lambda) ++hits;
        int i = 0;
        while (i < n && ++idx[i] == units.size()) idx[i++] = 0;
        if (i == n) break;
    }
    return hits;
}

}  // namespace

TEST(Brute, CharacteristicTwo) {
    auto F = build_field(2, 1);
    FieldView v(F, 1);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(count_bruteforce(v, n, F.zero()).N, (n + 1) % 2 == 0 ? 1 : 0);
        EXPECT_EQ(count_bruteforce(v, n, F.one()).N, (n + 1) % 2 == 1 ? 1 : 0);
    }
}

TEST(Brute, ThreeElementsTwoVariables) {
    auto F = build_field(3, 1);
    FieldView v(F, 1);
    EXPECT_EQ(count_bruteforce(v, 2, F.from_int(0)).N, 1);
    EXPECT_EQ(count_bruteforce(v, 2, F.from_int(1)).N, 0);
    EXPECT_EQ(count_bruteforce(v, 2, F.from_int(2)).N, 3);
}

TEST(Brute, MatchesNaiveEnumeration) {
    for (auto [p, m, n] : {std::tuple{5, 1, 3}, {2, 3, 3}, {3, 2, 2}, {7, 1, 2}}) {
        auto F = build_field(p, m);
        FieldView v(F, m);
        auto all = bruteforce_all_fibers(v, n);
        for (FFElem l : v.elements()) EXPECT_EQ(all[view_index(v, l)], naive_count(F, n, l)) << p << "^" << m;
    }
}

TEST(Brute, FibersPartitionTheTorus) {
    for (auto [p, m, n] : {std::tuple{3, 2, 3}, {5, 1, 4}, {2, 4, 2}}) {
        auto F = build_field(p, m);
        auto all = bruteforce_all_fibers(FieldView(F, m), n);
        std::int64_t s = 0;
        for (auto x : all) s += x;
        EXPECT_EQ(s, torus_size(F.q, n));
    }
}

TEST(Brute, WorkCap) {
    auto F = build_field(11, 1);
    EXPECT_THROW(count_bruteforce(FieldView(F, 1), 4, F.one(), 1000), WorkCapExceeded);
}

TEST(Gauss, HandExampleAndZeroFiber) {
    auto F = build_field(3, 1);
    FieldView v(F, 1);
    CharTable<Real128> ct(v);
    auto gt = build_gauss_table(ct);
    EXPECT_EQ(count_gauss(ct, gt, 2, F.from_int(2)).N, 3);
    EXPECT_EQ(count_gauss_zero(ct, gt, 2).N, 1);
    EXPECT_THROW(count_gauss(ct, gt, 2, F.zero()), ZeroElement);

    auto F5 = build_field(5, 1);
    CharTable<Real128> ct5(FieldView(F5, 1));
    EXPECT_EQ(count_gauss_zero(ct5, build_gauss_table(ct5), 4).N, 51);
}

TEST(Gauss, EqualsBruteForceSweep) {
    // both p | n+1 and p coprime to n+1 occur: (2, 3^k), (3, 2^k), (4, 5)
    for (auto [p, m, n] : {std::tuple{7, 1, 2}, {3, 2, 2}, {2, 3, 2}, {3, 3, 2}, {5, 1, 4}, {3, 2, 3}, {2, 2, 3}, {13, 1, 3}}) {
        auto F = build_field(p, m);
        FieldView v(F, m);
        CharTable<Real128> ct(v);
        auto gt = build_gauss_table(ct);
        auto brute = bruteforce_all_fibers(v, n);
        for (FFElem l : v.elements()) {
            auto fc = l.code == 0 ? count_gauss_zero(ct, gt, n) : count_gauss(ct, gt, n, l);
            EXPECT_EQ(fc.N, brute[view_index(v, l)]) << p << "^" << m << " n=" << n << " code " << l.code;
        }
        EXPECT_EQ(gauss_all_fibers(ct, gt, n), brute);
    }
}

TEST(Gauss, BulkOnSubfieldView) {
    auto F = build_field(3, 4);
    FieldView v(F, 2);
    CharTable<Real128> ct(v);
    EXPECT_EQ(gauss_all_fibers(ct, build_gauss_table(ct), 3), bruteforce_all_fibers(v, 3));
}

TEST(Gauss, GeneratorIndependence) {
    for (auto [p, m] : {std::pair{5, 2}, {2, 4}, {3, 2}, {23, 1}}) {
        std::vector<std::vector<long>> by_seed;
        for (std::uint64_t seed : {0, 1, 5}) {
            auto F = build_field(p, m, seed);
            FieldView v(F, m);
            CharTable<Real128> ct(v);
            auto all = gauss_all_fibers(ct, build_gauss_table(ct), 2);
            // reindex by coefficient vector so differing moduli can be compared on F_p only
            std::vector<long> prime_part;
            for (int a = 0; a < p; ++a) prime_part.push_back(all[view_index(v, F.from_int(a))]);
            by_seed.push_back(prime_part);
        }
        EXPECT_EQ(by_seed[0], by_seed[1]);
        EXPECT_EQ(by_seed[0], by_seed[2]);
    }
}

TEST(Gauss, PrecisionRetryPath) {
    auto F = build_field(7, 4);
    RunConfig c = cfg();
    c.precision_bits = 64;
    CountMethod used;
    auto viaretry = all_fiber_counts(FieldView(F, 4), 2, c, &used);
    EXPECT_EQ(used, CountMethod::Gauss);
    c.precision_bits = 128;
    EXPECT_EQ(viaretry, all_fiber_counts(FieldView(F, 4), 2, c));
}

TEST(Trace, ExamplesAndWeilBound) {
    EXPECT_EQ(frob_trace(2, 3, 1), 0);
    for (int n = 2; n <= 5; ++n)
        for (long N : {0L, 17L, 1234L}) EXPECT_EQ(count_from_trace(n, 11, frob_trace(n, 11, N).get_num()), N);
    for (int q : {5, 7, 11, 13}) {
        auto F = build_field(q, 1);
        FieldView v(F, 1);
        auto all = bruteforce_all_fibers(v, 2);
        for (FFElem l : v.elements()) {
            if (classify_fiber(v, 2, l) != FiberKind::Good) continue;
            BigRat t = frob_trace(2, q, all[view_index(v, l)]);
            EXPECT_LE(t * t, BigRat(4 * q)) << q;
        }
    }
}

TEST(Trace, SumOverLineIsMinusOne) {
    for (auto [p, m0, n, K] : {std::tuple{5, 1, 2, 3}, {7, 1, 3, 2}, {2, 1, 2, 3}, {3, 1, 4, 2}}) {
        for (int k = 1; k <= K; ++k) {
            auto F = build_field(p, m0 * k);
            FieldView v(F, m0 * k);
            auto all = all_fiber_counts(v, n, RunConfig{});
            BigRat s = 0;
            for (FFElem l : v.elements()) s += frob_trace(n, BigInt(static_cast<long>(v.q())), all[view_index(v, l)]);
            EXPECT_EQ(s, -1) << p << " n=" << n << " k=" << k;
        }
    }
}

TEST(Charpoly, TwoVariableShapes) {
    auto c = build_census(2, 7, 1, 1, 1, cfg());
    int bad = 0;
    for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
        auto fd = c.frobenius(i, true);
        if (c.kinds[i] == FiberKind::Bad) {
            ++bad;
            ASSERT_EQ(fd.cp.degree(), 1);
            EXPECT_TRUE(fd.cp[1] == 1 || fd.cp[1] == -1);
        } else {
            ASSERT_EQ(fd.cp.degree(), 2);
            EXPECT_EQ(fd.cp[2], 7);
            EXPECT_EQ(fd.cp[1], -frob_trace(2, 7, c.counts[0][i]));
        }
    }
    EXPECT_EQ(bad, 3);  // lambda^3 = 27 has three roots in F_7
}

TEST(Charpoly, CubicPredictsThirdLevel) {
    // n = 3, q = 7: the charpoly from two levels determines the count over F_{7^3}
    auto F = build_field(7, 6);
    FieldView v1(F, 1), v2(F, 2), v3(F, 3);
    RunConfig c;
    auto a1 = all_fiber_counts(v1, 3, c), a2 = all_fiber_counts(v2, 3, c), a3 = all_fiber_counts(v3, 3, c);
    FFElem lam = F.one();
    std::vector<BigInt> counts = {BigInt(static_cast<long>(a1[view_index(v1, lam)])),
                                  BigInt(static_cast<long>(a2[view_index(v2, lam)]))};
    auto fd = fiber_charpoly(v1, 3, lam, counts, true);
    ASSERT_EQ(fd.kind, FiberKind::Good);
    ASSERT_EQ(fd.cp.degree(), 3);
    EXPECT_EQ(count_from_trace(3, 343, charpoly_power_sum(fd.cp, 3).get_num()), a3[view_index(v3, lam)]);
    // with three levels the determinant becomes a check rather than an input
    counts.emplace_back(static_cast<long>(a3[view_index(v3, lam)]));
    EXPECT_EQ(fiber_charpoly(v1, 3, lam, counts, true).cp, fd.cp);
}

TEST(Charpoly, OddRankCarriesChiQ) {
    auto c = build_census(3, 11, 1, 1, 2, cfg());
    FieldView v(*c.field, 1);
    for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
        auto fd = c.frobenius(i, true);
        if (c.kinds[i] != FiberKind::Good) continue;
        BigRat ev(BigInt(11 * c.det_signs[i]));
        EXPECT_EQ(fd.cp.eval(BigRat(1) / ev), 0) << i;
    }
}

TEST(Charpoly, PurityOverExtensions) {
    for (auto [n, p, k, J] : {std::tuple{2, 5, 2, 1}, {3, 5, 1, 2}, {4, 3, 1, 3}, {4, 7, 1, 3}}) {
        auto c = build_census(n, p, 1, k, J, cfg());
        for (std::size_t i = 0; i < c.lambdas.size(); ++i)
            if (c.kinds[i] != FiberKind::ZeroWild) EXPECT_NO_THROW(c.frobenius(i, true)) << n << " " << p << " " << i;
    }
}

TEST(Charpoly, WildZeroExcluded) {
    auto c = build_census(2, 3, 1, 1, 1, cfg());
    EXPECT_EQ(c.kinds[0], FiberKind::ZeroWild);
    EXPECT_THROW(c.frobenius(0), HypothesisViolated);
    EXPECT_THROW(moment_counts(2, 3, 1, 1, MomentMethod::Charpoly, RunConfig{}), HypothesisViolated);
}

TEST(Moment, DirectAndCharpolyAgree) {
    auto s = moment_counts(2, 5, 2, 3, MomentMethod::Both, RunConfig{});
    ASSERT_EQ(s.counts.size(), 3u);
    auto t = moment_counts(3, 5, 2, 2, MomentMethod::Both, RunConfig{});
    EXPECT_EQ(t.counts.size(), 2u);
}

TEST(Moment, FirstMomentIsTheTorus) {
    auto s = moment_counts(3, 4, 1, 3, MomentMethod::Direct, RunConfig{});
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(s.counts[k - 1], ipow(ipow(BigInt(4), k) - 1, 3));
}
