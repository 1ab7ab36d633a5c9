#include <filesystem>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dwork/error.hpp"
#include "dwork/ffield/field.hpp"

using namespace dwork;

namespace {

// Schoolbook product of coefficient vectors reduced by the monic modulus.
std::vector<int> slow_mul(const FieldCtx& F, std::vector<int> a, const std::vector<int>& b) {
    const int m = F.m, p = F.p;
    std::vector<long long> c(2 * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i + j] += static_cast<long long>(a[i]) * b[j];
    for (int i = 2 * m - 1; i >= m; --i) {
        long long t = c[i] % p;
        for (int j = 0; j <= m; ++j) c[i - m + j] -= t * F.modulus[j];
    }
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) out[i] = static_cast<int>(((c[i] % p) + p) % p);
    return out;
}

}  // namespace

TEST(BuildField, SmallExamples) {
    auto F3 = build_field(3, 1, 0);
    EXPECT_EQ(F3.g.code, 2u);
    auto F2 = build_field(2, 1, 0);
    EXPECT_EQ(F2.g.code, 1u);
    EXPECT_EQ(F2.q, 2u);
    auto F25 = build_field(5, 2, 0);
    EXPECT_EQ(F25.q, 25u);
    // order exactly 24 = 2^3 * 3
    EXPECT_NE(F25.pow(F25.g, 12), F25.one());
    EXPECT_NE(F25.pow(F25.g, 8), F25.one());
    EXPECT_EQ(F25.pow(F25.g, 24), F25.one());
}

TEST(BuildField, GeneratorCertificate) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 8}, {3, 5}, {7, 3}, {13, 2}, {31, 1}, {2, 12}}) {
        auto F = build_field(p, m, 3);
        for (auto r : prime_factors(F.q - 1)) EXPECT_NE(F.pow(F.g, (F.q - 1) / r), F.one()) << p << "^" << m;
        EXPECT_EQ(F.log_table()[F.g.code], 1);
    }
}

TEST(BuildField, Deterministic) {
    auto a = build_field(7, 3, 5), b = build_field(7, 3, 5);
    EXPECT_EQ(a.modulus, b.modulus);
    EXPECT_EQ(a.exp_table(), b.exp_table());
}

TEST(BuildField, Caps) {
    EXPECT_THROW(build_field(2, 25), CapExceeded);
    EXPECT_THROW(build_field(7, 3, 0, 100), CapExceeded);
    EXPECT_THROW(build_field(6, 1), InvalidArgument);
}

TEST(BuildField, MultiplicationMatchesPolynomialArithmetic) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {5, 2}, {7, 3}}) {
        auto F = build_field(p, m, 1);
        std::mt19937_64 rng(p * 100 + m);
        for (int t = 0; t < 500; ++t) {
            FFElem a{static_cast<std::uint32_t>(rng() % F.q)}, b{static_cast<std::uint32_t>(rng() % F.q)};
            EXPECT_EQ(F.coeffs(F.mul(a, b)), slow_mul(F, F.coeffs(a), F.coeffs(b)));
            auto ca = F.coeffs(a), cb = F.coeffs(b), cs = F.coeffs(F.add(a, b));
            for (int i = 0; i < m; ++i) EXPECT_EQ(cs[i], (ca[i] + cb[i]) % p);
            EXPECT_EQ(F.add(F.sub(a, b), b), a);
        }
    }
}

TEST(Trace, PrimeSubfieldAndZero) {
    auto F = build_field(3, 4, 0);
    EXPECT_EQ(trace_to_prime(F, F.zero()), 0);
    for (int x = 0; x < 3; ++x) EXPECT_EQ(trace_to_prime(F, F.from_int(x)), (4 * x) % 3);
}

TEST(Trace, F9HistogramIsUniform) {
    auto F = build_field(3, 2, 0);
    std::vector<int> hist(3, 0);
    for (std::uint32_t c = 0; c < F.q; ++c) hist[trace_to_prime(F, {c})]++;
    EXPECT_EQ(hist, (std::vector<int>{3, 3, 3}));
}

TEST(Trace, LinearFormMatchesDefinition) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 10}, {3, 6}, {5, 4}, {7, 3}}) {
        auto F = build_field(p, m, 2);
        for (std::uint32_t c = 0; c < F.q; ++c) ASSERT_EQ(F.trace({c}), F.trace_by_definition({c}));
    }
}

TEST(Subfield, Examples) {
    auto F9 = build_field(3, 2, 0);
    auto whole = subfield_elements(F9, 2);
    std::set<std::uint32_t> codes;
    for (auto x : whole) codes.insert(x.code);
    EXPECT_EQ(codes.size(), 9u);
    auto prime = subfield_elements(F9, 1);
    ASSERT_EQ(prime.size(), 3u);
    for (auto x : prime) EXPECT_EQ(F9.pow(x, 3), x);

    auto F = build_field(5, 4, 0);
    auto sub = subfield_elements(F, 2);
    ASSERT_EQ(sub.size(), 25u);
    std::set<std::uint32_t> seen;
    for (auto x : sub) {
        EXPECT_EQ(F.pow(x, 25), x);
        seen.insert(x.code);
    }
    EXPECT_EQ(seen.size(), 25u);
    EXPECT_THROW(subfield_elements(F, 3), NotADivisor);
}

TEST(Subfield, ClosedUnderFieldOperations) {
    for (auto [p, m, e] : std::vector<std::tuple<int, int, int>>{{2, 8, 4}, {3, 4, 2}, {2, 6, 3}, {5, 2, 1}}) {
        auto F = build_field(p, m, 0);
        FieldView V(F, e);
        auto el = V.elements();
        for (auto a : el)
            for (auto b : el) {
                ASSERT_TRUE(V.contains(F.add(a, b)));
                ASSERT_TRUE(V.contains(F.mul(a, b)));
            }
    }
}

TEST(Subfield, TraceTransitivity) {
    // Tr_{q^2/p} = Tr_{q/p}(x + x^q) for x in the big field, q = 3^2
    auto F = build_field(3, 4, 0);
    FieldView V(F, 2);
    for (std::uint32_t c = 0; c < F.q; ++c) {
        FFElem x{c};
        FFElem rel = F.add(x, F.pow(x, 9));
        ASSERT_EQ(V.trace(rel), F.trace(x));
    }
}

TEST(Frobenius, PermutesAndFixesPrimeField) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 16}, {3, 8}, {7, 5}}) {
        auto F = build_field(p, m, 0);
        std::vector<char> hit(F.q, 0);
        std::uint64_t fixed = 0;
        for (std::uint32_t c = 0; c < F.q; ++c) {
            FFElem y = F.pow({c}, p);
            ASSERT_FALSE(hit[y.code]);
            hit[y.code] = 1;
            if (y.code == c) {
                ++fixed;
                EXPECT_LT(c, static_cast<std::uint32_t>(p));
            }
        }
        EXPECT_EQ(fixed, static_cast<std::uint64_t>(p));
    }
}

TEST(Dlog, Examples) {
    auto F = build_field(7, 3, 0);
    EXPECT_EQ(dlog(F, F.g), 1u);
    EXPECT_EQ(dlog(F, F.one()), 0u);
    EXPECT_THROW(dlog(F, F.zero()), ZeroElement);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1000; ++t) {
        FFElem x{static_cast<std::uint32_t>(1 + rng() % (F.q - 1))};
        EXPECT_EQ(F.pow(F.g, dlog(F, x)), x);
    }
}

TEST(Cache, RoundTrip) {
    auto dir = std::filesystem::temp_directory_path() / "dwork_field_cache_test";
    std::filesystem::remove_all(dir);
    auto a = build_field(5, 3, 4, 1 << 24, dir.string());
    EXPECT_TRUE(std::filesystem::exists(dir / "field_p5_m3_s4.json"));
    auto b = build_field(5, 3, 4, 1 << 24, dir.string());
    EXPECT_EQ(a.modulus, b.modulus);
    EXPECT_EQ(a.g, b.g);
    std::filesystem::remove_all(dir);
}

TEST(PrimePower, Parses) {
    EXPECT_EQ(prime_power(49), std::make_pair(7, 2));
    EXPECT_EQ(prime_power(2), std::make_pair(2, 1));
    EXPECT_THROW(prime_power(12), InvalidArgument);
}
