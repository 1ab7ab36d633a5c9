#include "dwork/zeta0/zeta0.hpp"

#include <cmath>

#include "dwork/charsums/gauss.hpp"
#include "dwork/counting/counting.hpp"
#include "dwork/error.hpp"

namespace dwork {

namespace {

template <class Real>
ZetaX0Report build(int p, int n, const RunConfig& cfg) {
    ZetaX0Report r;
    r.p = p;
    r.n = n;
    r.bits = mantissa_bits<Real>();
    r.seed = cfg.seed;
    int m = n + 1;
    while (m % p == 0) {
        m /= p;
        ++r.a;
    }
    r.m = m;
    for (int i = 0; i <= n - 1; ++i) r.trivial.add(i, (i % 2 ? -1 : 1) * binom_ll(n, i + 1));
    r.orbits = p_orbits(m, p);

    std::vector<Complex<Real>> prod = {Complex<Real>{Real(1), Real(0)}};
    int total_d = 0;
    for (const Orbit& o : r.orbits.orbits) {
        const int d = o.length;
        if (std::pow(static_cast<long double>(p), d) > static_cast<long double>(cfg.field_cap))
            throw OrbitFieldCapExceeded("orbit of length " + std::to_string(d) + " needs F_{" + std::to_string(p) + "^" +
                                        std::to_string(d) + "}");
        FieldCtx F = build_field(p, d, cfg.seed, cfg.field_cap, cfg.cache_dir);
        FieldView v(F, d);
        CharTable<Real> ct(v);
        auto gt = gauss_table_cached<Real>(v, cfg.fft_threshold, cfg.cache_dir);
        OrbitFactor f;
        f.orbit = o;
        f.index = static_cast<std::int64_t>(o.rep) * static_cast<std::int64_t>(v.order()) / m;
        const Complex<Real> G = gt(f.index);
        const Real pd = Real(static_cast<long long>(v.q()));
        const Complex<Real> c = cpow(G, static_cast<unsigned long long>(n + 1)) * (Real(1) / pd);
        f.G_re = to_string_real(G.re, 30);
        f.G_im = to_string_real(G.im, 30);
        f.c_re = to_string_real(c.re, 30);
        f.c_im = to_string_real(c.im, 30);
        f.magnitude = to_ld(abs(c));
        f.expected = std::pow(static_cast<long double>(p), d * (n - 1) / 2.0L);
        f.rel_error = std::fabs(f.magnitude - f.expected) / f.expected;
        f.field = F.describe();
        if (f.rel_error > 1e-6L)
            throw PurityViolation("orbit factor magnitude " + std::to_string((double)f.magnitude) + " differs from p^{d(n-1)/2}");
        r.factors.push_back(f);

        // prod *= (1 - c T^d)
        std::vector<Complex<Real>> next(prod.size() + d);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i] += prod[i];
            next[i + d] -= prod[i] * c;
        }
        prod = std::move(next);
        total_d += d;
    }
    if (total_d != m - 1) throw Mismatch("orbit lengths sum to " + std::to_string(total_d) + ", expected m-1");

    // coefficients have denominator dividing p^{sum d}
    const BigInt scale = ipow(BigInt(p), total_d);
    const Real rscale = real_from<Real>(scale);
    using std::pow;
    using std::abs;
    const Real tol = pow(Real(2), 20 - mantissa_bits<Real>());
    std::vector<BigRat> coeffs;
    long double worst = 0;
    for (const auto& z : prod) {
        Real x = z.re * rscale;
        BigInt rounded = round_to_mpz(x);
        Real err = abs(x - real_from<Real>(rounded)) + abs(z.im * rscale);
        Real rel = err / (1 + abs(x));
        worst = std::max(worst, to_ld(rel));
        if (rel > tol) throw PrecisionLoss("X_0 nontrivial coefficient is not within 2^{20-bits} of a rational with denominator p^" +
                                           std::to_string(total_d));
        coeffs.emplace_back(rounded, scale);
        coeffs.back().canonicalize();
    }
    r.rounding_error = worst;
    r.nontrivial = Poly(std::move(coeffs));
    return r;
}

}  // namespace

ZetaSeries ZetaX0Report::zeta_series(int K) const {
    BigInt P(p);
    ZetaSeries s = series_mul(trivial.to_series(P, K), series_from_poly(nontrivial, K));
    if (n % 2) s = series_inv(s);
    s.base_q = P;
    return s;
}

ZetaX0Report zeta_X0(int p, int n, const RunConfig& cfg) {
    if (!is_prime(p)) throw InvalidArgument("zeta_X0 works over a prime field");
    if (n < 1) throw InvalidArgument("n must be positive");
    return with_precision_retry(cfg.precision_bits, [&]<class Real>() { return build<Real>(p, n, cfg); });
}

std::vector<BigInt> zero_fiber_counts(int p, int n, int K, const RunConfig& cfg) {
    std::vector<BigInt> N;
    for (int k = 1; k <= K; ++k) {
        FieldCtx F = build_field(p, k, cfg.seed, cfg.field_cap, cfg.cache_dir);
        FieldView v(F, k);
        long double work = std::pow(static_cast<long double>(v.order()), n);
        CountMethod method = work <= static_cast<long double>(cfg.brute_bulk_limit) ? CountMethod::Brute : CountMethod::Gauss;
        N.push_back(count_fiber(v, n, F.zero(), cfg, method).N);
    }
    return N;
}

BigRat validate_zeta_X0(const ZetaX0Report& report, int K, const RunConfig& cfg) {
    auto direct = series_exp_from_counts(zero_fiber_counts(report.p, report.n, K, cfg));
    auto formula = report.zeta_series(K);
    BigRat worst = 0;
    for (int k = 0; k <= K; ++k) {
        BigRat d = abs(direct[k] - formula[k]);
        if (d > worst) worst = d;
    }
    if (worst != 0)
        throw Mismatch("zeta of X_0 differs from the count series by " + worst.get_str() + " (p=" + std::to_string(report.p) +
                       ", n=" + std::to_string(report.n) + ")");
    return worst;
}

}  // namespace dwork
