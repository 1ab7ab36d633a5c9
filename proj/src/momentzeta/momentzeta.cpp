#include "dwork/momentzeta/momentzeta.hpp"

#include <algorithm>
#include <cmath>

#include "dwork/error.hpp"
#include "dwork/exactalg/charpoly.hpp"
#include "dwork/exactalg/roots.hpp"
#include "dwork/ffield/field.hpp"

namespace dwork {

namespace {

BigInt big(std::uint64_t q) { return BigInt(static_cast<unsigned long>(q)); }

long double target_magnitude(const BigInt& q, int weight) {
    return std::pow(static_cast<long double>(q.get_d()), static_cast<long double>(weight) / 2);
}

// Largest e with (1 - c T)^e dividing p; p is replaced by the quotient.
int strip_factor(Poly& p, const BigRat& c) {
    Poly f = Poly::one_minus(c);
    int e = 0;
    while (p.degree() > 0) {
        auto [qt, r] = divmod(p, f);
        if (!r.is_zero()) break;
        p = qt;
        ++e;
    }
    return e;
}

void record_purity(const Poly& p, const std::string& part, long double expected, int bits, std::vector<PurityEntry>& out,
                   long double& worst) {
    for (long double m : reciprocal_root_magnitudes(p, bits)) {
        long double rel = std::fabs(m - expected) / expected;
        out.push_back({part, m, expected, rel});
        worst = std::max(worst, rel);
    }
}

std::vector<BigInt> counts_for(int n, std::uint64_t q, int d, int K, MomentMethod method, const RunConfig& cfg,
                               const std::vector<LevelCensus>* census, std::vector<std::string>& fields) {
    bool use_census = census && static_cast<int>(census->size()) >= K &&
                      (method == MomentMethod::Charpoly || method == MomentMethod::Auto);
    if (use_census) {
        std::vector<LevelCensus> first(census->begin(), census->begin() + K);
        for (const auto& c : first) fields.push_back(c.field->describe());
        return moment_counts_from_census(first, d);
    }
    auto spec = moment_counts(n, q, d, K, method, cfg);
    fields.insert(fields.end(), spec.fields_used.begin(), spec.fields_used.end());
    return spec.counts;
}

}  // namespace

int moment_budget(int n, int d) {
    auto pr = P_d_degree(n, d);
    return static_cast<int>(pr.total()) + 2;
}

std::vector<LevelCensus> census_levels(int n, std::uint64_t q, int K, const RunConfig& cfg) {
    auto [p, m0] = prime_power(q);
    std::vector<LevelCensus> out;
    for (int k = 1; k <= K; ++k) out.push_back(build_census(n, p, m0, k, std::max(1, n - 1), cfg));
    return out;
}

MomentReport run_moment(int n, std::uint64_t q, int d, int K, MomentMethod method, const RunConfig& cfg,
                        const std::vector<LevelCensus>* census) {
    auto [p, m0] = prime_power(q);
    if ((n + 1) % p == 0) throw HypothesisViolated("p = " + std::to_string(p) + " divides n+1");
    if (n < 2 || d < 1) throw InvalidArgument("run_moment needs n >= 2 and d >= 1");
    MomentReport rep;
    rep.n = n;
    rep.p = p;
    rep.m0 = m0;
    rep.d = d;
    rep.q = big(q);
    rep.predicted = P_d_degree(n, d);
    rep.budget = moment_budget(n, d);
    if (K == 0) K = rep.budget;
    if (K < rep.budget && !cfg.force)
        throw InvalidArgument("K = " + std::to_string(K) + " is below the degree budget " + std::to_string(rep.budget) +
                              " (use --force)");
    rep.K = K;
    rep.method = method == MomentMethod::Auto ? MomentMethod::Charpoly : method;

    std::vector<LevelCensus> own;
    if (!census || static_cast<int>(census->size()) < K) {
        own = census_levels(n, q, K, cfg);
        census = &own;
    }
    rep.counts = counts_for(n, q, d, K, method, cfg, census, rep.fields_used);
    rep.Zd = series_exp_from_counts(rep.counts);
    rep.Zd.base_q = rep.q;
    if (!rep.Zd.integral()) throw Mismatch("Z_" + std::to_string(d) + " has a non-integral coefficient");

    ZetaSeries Zs = n % 2 ? rep.Zd : series_inv(rep.Zd);
    rep.Qd = Q_d_from_local_data(n, d);
    rep.Qd_display = Q_d_trivial(n, d);
    for (int k = 1; k <= K; ++k) rep.bad_sums.push_back(bad_fiber_defect((*census)[k - 1], d));
    rep.bad_factor = series_exp_from_sums(rep.bad_sums);
    ZetaSeries Qs = series_mul(rep.Qd.to_series(rep.q, K), rep.bad_factor);
    ZetaSeries R = series_div(Zs, Qs);
    int slack = std::min(2, K - static_cast<int>(rep.predicted.total()));
    if (slack < 0) slack = 0;
    rep.Pd = pade_reconstruct_auto(R, rep.predicted.num, rep.predicted.den, slack);
    rep.observed_num = rep.Pd.num.degree();
    rep.observed_den = rep.Pd.den.degree();
    rep.degree_exact = rep.observed_num == rep.predicted.num && rep.observed_den == rep.predicted.den;

    rep.factorization_ok = series_mul(rep.Pd.series(K), Qs) == Zs;
    if (!rep.factorization_ok) throw Mismatch("Z_d^{(-1)^{n-1}} != P_d Q_d to order " + std::to_string(K));

    const int w = d * (n - 1) + 1;
    const long double expect = target_magnitude(rep.q, w);
    record_purity(rep.Pd.num, "num", expect, cfg.precision_bits, rep.purity, rep.max_purity_error);
    record_purity(rep.Pd.den, "den", expect, cfg.precision_bits, rep.purity, rep.max_purity_error);
    if (rep.max_purity_error > 1e-6L)
        throw PurityViolation("P_" + std::to_string(d) + " root off weight " + std::to_string(w) + " by " +
                              std::to_string(static_cast<double>(rep.max_purity_error)));
    rep.fe_sign_num = functional_equation_check(rep.Pd.num, w, rep.q);
    rep.fe_sign_den = functional_equation_check(rep.Pd.den, w, rep.q);

    const int D = rep.observed_total();
    for (int k = 1; k <= K; ++k) {
        Cor12Entry e;
        e.k = k;
        e.N = rep.counts[k - 1];
        e.D = D;
        BigInt Qk = ipow(rep.q, k);
        BigInt Qkd = ipow(Qk, d);
        e.main_term = BigRat(ipow(Qkd - 1, n)) / BigRat(ipow(Qk, d - 1));
        if (d % 2 == 0) e.main_term += BigRat(ipow(Qk, d * (n - 1) / 2 + 1));
        e.deviation = abs(BigRat(e.N) - e.main_term);
        BigRat bound2 = BigRat((D + 2) * (D + 2)) * BigRat(ipow(Qk, d * (n - 1) + 1));
        e.holds = e.deviation * e.deviation <= bound2;
        rep.cor12.push_back(std::move(e));
    }
    return rep;
}

bool congruence_hypotheses(int n, int p, int d1, int d2, int m) {
    if (m < 0 || d1 < n * m + 1 || d1 > d2) return false;
    long mod = (p - 1) * ipow(BigInt(p), m).get_si();
    return (d2 - d1) % mod == 0;
}

int congruence_check(int n, std::uint64_t q, int d1, int d2, int m, int K, const RunConfig& cfg,
                     const std::vector<LevelCensus>* census) {
    auto [p, m0] = prime_power(q);
    (void)m0;
    if (!congruence_hypotheses(n, p, d1, d2, m))
        throw HypothesisViolated("congruence needs nm+1 <= d1 <= d2 and d1 = d2 mod (p-1)p^m");
    std::vector<std::string> fields;
    MomentMethod method = (n + 1) % p == 0 ? MomentMethod::Direct : MomentMethod::Charpoly;
    auto z1 = series_exp_from_counts(counts_for(n, q, d1, K, method, cfg, census, fields));
    auto z2 = d1 == d2 ? z1 : series_exp_from_counts(counts_for(n, q, d2, K, method, cfg, census, fields));
    BigInt mod = ipow(BigInt(p), m + 1);
    for (int k = 0; k <= K; ++k) {
        BigRat diff = z1[k] - z2[k];
        if (diff.get_den() != 1 || diff.get_num() % mod != 0)
            throw CongruenceFailure("coefficient " + std::to_string(k) + " of Z_" + std::to_string(d1) + " - Z_" +
                                    std::to_string(d2) + " is " + diff.get_str() + ", not 0 mod " + mod.get_str());
    }
    return K;
}

BigRat bad_fiber_defect(const LevelCensus& c, int d) {
    const int n = c.n;
    BigRat out = 0;
    for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
        if (c.kinds[i] != FiberKind::Bad) continue;
        Poly cp = c.frobenius(i).cp;
        out += charpoly_power_sum(cp, d);
        for (int b = 0; b <= std::min(n, d); ++b) {
            long e = (b % 2 ? 1 : -1) * (b - 1);
            if (e == 0) continue;
            Poly f = bad_local_factor(n, c.Q, cp, d - b, b);
            out += BigRat(e) * f.coeff(1);  // trace = -coeff(1)
        }
    }
    return out;
}

Poly tensor_charpoly(const Poly& cp, int j, int k) {
    const int r = cp.degree();
    const long long dimS = j == 0 ? 1 : binom_ll(r + j - 1, j);
    const long long R = dimS * binom_ll(r, k);
    if (R == 0) return Poly::one();
    std::vector<BigRat> ps;
    for (int t = 1; t <= R; ++t) {
        Poly ct = charpoly_adams(cp, t);
        ps.push_back(complete_from_charpoly(ct, j)[j] * elementary_from_charpoly(ct, k)[k]);
    }
    return power_sums_to_charpoly(ps, static_cast<int>(R));
}

Poly bad_local_factor(int n, const BigInt& q, const Poly& cp, int a, int b) {
    Poly out = Poly::one();
    auto piece = [&](const Poly& W, int j, int k, const BigRat& mu) {
        if (j < 0 || k < 0) return;
        out *= tensor_charpoly(W, j, k).scale_var(mu);
    };
    if (n % 2 == 0) {
        // F = U_2 + W: a Jordan block with eigenvalues eps s, eps s q (s = q^{(n-2)/2})
        // and an unramified W of rank n-2.
        const BigRat s(ipow(q, (n - 2) / 2));
        Poly W;
        BigRat es;
        bool found = false;
        for (int eps : {1, -1}) {
            auto [qt, r] = divmod(cp, Poly::one_minus(BigRat(eps) * s));
            if (r.is_zero()) {
                W = qt;
                es = BigRat(eps) * s;
                found = true;
                break;
            }
        }
        if (!found) throw Mismatch("bad fiber charpoly " + to_string(cp) + " has no factor 1 -+ q^{(n-2)/2} T");
        const BigRat Q(q);
        for (int i = 0; i <= a; ++i) {
            BigRat esi = 1;
            for (int t = 0; t < i; ++t) esi *= es;
            // Sym^i U_2 (x) wedge^b W
            piece(W, a - i, b, esi);
            // Sym^i U_2 (x) U_2 = U_{i+2} + U_i
            if (i == 0) {
                piece(W, a, b - 1, es);
            } else {
                piece(W, a - i, b - 1, esi * es);
                piece(W, a - i, b - 1, esi * es * Q);
            }
            // Sym^i U_2 (x) wedge^2 U_2, the latter unramified with eigenvalue s^2 q
            piece(W, a - i, b - 2, esi * s * s * Q);
        }
    } else {
        // F = L + W with L the quadratic-character line; L^2 has eigenvalue q^{n-1}.
        for (int i = 0; i <= a; ++i) {
            for (int extra = 0; extra <= 1; ++extra) {
                int P = i + extra;
                if (P % 2) continue;
                piece(cp, a - i, b - extra, BigRat(ipow(q, (n - 1) * P / 2)));
            }
        }
    }
    return out;
}

int gab_budget(int n, int a, int b) {
    long num = degP(n, a, b), den = 0;
    for (long long x : alpha_vector(n, a, b)) (x > 0 ? num : den) += std::abs(x);
    return static_cast<int>(num + den) + 2;
}

bool GabReport::ok(long double tol) const {
    return observed_total == predicted_total && alpha_obs == alpha_pred && D_obs == D_pred && P_polynomial &&
           degP_obs == degP_pred && purity_error <= tol && fe_sign != 0;
}

GabReport run_gab(int n, std::uint64_t q, int a, int b, int K, const RunConfig& cfg,
                  const std::vector<LevelCensus>* census) {
    auto [p, m0] = prime_power(q);
    if (n != 2 && n != 3) throw InvalidArgument("run_gab supports n = 2, 3");
    if ((n + 1) % p == 0) throw HypothesisViolated("p divides n+1");
    if ((q - 1) % (n + 1) != 0) throw HypothesisViolated("run_gab needs (n+1) | (q-1) so bad points are rational");
    if (a < 0 || b < 0 || b > n || a + b == 0) throw InvalidArgument("run_gab needs a, b >= 0, 1 <= a+b, b <= n");

    GabReport rep;
    rep.n = n;
    rep.a = a;
    rep.b = b;
    rep.q = big(q);
    rep.predicted_total = n * rank_G(n, a, b);
    rep.delta = delta(n, a, b);
    rep.alpha_pred = alpha_vector(n, a, b);
    rep.D_pred = D_local(n, a, b);
    rep.degP_pred = degP(n, a, b);
    const int budget = gab_budget(n, a, b);
    if (K == 0) K = budget;
    if (K < budget && !cfg.force) throw InvalidArgument("K below the degree budget " + std::to_string(budget));
    rep.K = K;

    std::vector<LevelCensus> own;
    if (!census || static_cast<int>(census->size()) < K) {
        own = census_levels(n, q, K, cfg);
        census = &own;
    }
    for (int k = 1; k <= K; ++k) {
        const LevelCensus& c = (*census)[k - 1];
        rep.fields_used.push_back(c.field->describe());
        BigRat S = 0;
        for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
            if (c.kinds[i] != FiberKind::Good) continue;
            Poly cp = c.frobenius(i).cp;
            S += complete_from_charpoly(cp, a)[a] * elementary_from_charpoly(cp, b)[b];
        }
        rep.S.push_back(S);
    }
    rep.L = series_exp_from_sums(rep.S);

    // local factors at the bad points, all rational over F_q
    const LevelCensus& c1 = (*census)[0];
    rep.Q_obs = Poly::one();
    int nbad = 0;
    for (std::size_t i = 0; i < c1.lambdas.size(); ++i) {
        if (c1.kinds[i] != FiberKind::Bad) continue;
        Poly f = bad_local_factor(n, rep.q, c1.frobenius(i).cp, a, b);
        if (nbad == 0) rep.D_obs = f.degree();
        else if (rep.D_obs != f.degree()) rep.D_obs = -1;
        rep.Q_obs *= f;
        ++nbad;
    }
    if (nbad != n + 1) throw Mismatch("found " + std::to_string(nbad) + " bad points over F_q");

    const int w = (a + b) * (n - 1);
    Poly dpart = Poly::one();
    if (rep.delta) {
        if (w % 2) throw HalfIntegerPower("delta != 0 at odd weight");
        dpart = (Poly::one_minus(BigRat(ipow(rep.q, w / 2))) * Poly::one_minus(BigRat(ipow(rep.q, w / 2 + 1))))
                    .pow(rep.delta);
    }
    ZetaSeries Rs = series_div(series_mul(rep.L, series_from_poly(dpart, K)), series_from_poly(rep.Q_obs, K));
    long num = rep.degP_pred, den = 0;
    for (long long x : rep.alpha_pred) (x > 0 ? num : den) += std::abs(x);
    rep.R = pade_reconstruct_auto(Rs, num, den, std::max(0, std::min(2, K - static_cast<int>(num + den))));

    Poly rn = rep.R.num, rd = rep.R.den;
    for (std::size_t k = 0; k < rep.alpha_pred.size(); ++k) {
        BigRat qk(ipow(rep.q, k));
        rep.alpha_obs.push_back(strip_factor(rn, qk) - strip_factor(rd, qk));
    }
    rep.P_polynomial = rd.degree() == 0;
    rep.P = rn;
    rep.degP_obs = rn.degree();
    if (rep.degP_obs > 0) rep.purity_error = max_relative_deviation(rn, target_magnitude(rep.q, w + 1), cfg.precision_bits);
    try {
        rep.fe_sign = functional_equation_check(rn, w + 1, rep.q);
    } catch (const NoFunctionalEquation&) {
        rep.fe_sign = 0;
    }

    rep.L_rf = make_rational(rep.R.num * rep.Q_obs, rep.R.den * dpart);
    rep.observed_total = rep.L_rf.signed_degree();
    if (!(series_from_rational(rep.L_rf.num, rep.L_rf.den, K) == series_truncate(rep.L, K)))
        throw Mismatch("reassembled L(U, G) disagrees with the trace series");
    return rep;
}

Prop31Report prop31_check(int n, std::uint64_t q, int K, const RunConfig& cfg) {
    auto [p, m0] = prime_power(q);
    if (n != 2 && n != 3) throw InvalidArgument("prop31_check supports n = 2, 3");
    if ((q - 1) % (n + 1) != 0) throw HypothesisViolated("needs (n+1) | (q-1)");
    if (K == 0) K = 2 * n - 1;
    if (K < n) throw InvalidArgument("K must be at least n");
    Prop31Report rep;
    rep.n = n;
    rep.K = K;
    rep.q = big(q);
    for (int k = 1; k <= K; ++k) {
        FieldCtx F = build_field(p, m0 * k, cfg.seed, cfg.field_cap, cfg.cache_dir);
        FieldView v(F, F.m);
        auto counts = all_fiber_counts(v, n, cfg);
        auto els = v.elements();
        BigInt Qk = ipow(rep.q, k), total = 0;
        BigRat S = 0;
        for (FFElem l : els) {
            BigInt N(static_cast<long>(counts[view_index(v, l)]));
            total += N;
            if (classify_fiber(v, n, l) == FiberKind::Good) S += frob_trace(n, Qk, N);
        }
        if (total != ipow(Qk - 1, n)) throw Mismatch("fiber counts do not partition the torus at level " + std::to_string(k));
        rep.S.push_back(S);
    }
    rep.L = series_exp_from_sums(rep.S);
    ZetaSeries R = series_div(rep.L, series_from_poly(Poly::one_minus(BigRat(1)), K));
    ZetaSeries root = series_pow_rational(R, 1, n + 1);
    for (int i = 0; i <= K; ++i) {
        if (root[i].get_den() != 1) throw NotAPerfectPower("coefficient " + std::to_string(i) + " of the root is " + root[i].get_str());
        if (i >= n && sgn(root[i]) != 0)
            throw NotAPerfectPower("root has a nonzero T^" + std::to_string(i) + " coefficient " + root[i].get_str());
    }
    rep.P = Poly(std::vector<BigRat>(root.coeffs.begin(), root.coeffs.begin() + n));
    if (rep.P.degree() != n - 1) throw NotAPerfectPower("P has degree " + std::to_string(rep.P.degree()));
    ZetaSeries back = series_mul(series_from_poly(Poly::one_minus(BigRat(1)), K), series_pow(series_from_poly(rep.P, K), n + 1));
    if (!(back == rep.L)) throw NotAPerfectPower("(1 - T) P^{n+1} does not reproduce L(U, F)");

    LevelCensus c = build_census(n, p, m0, 1, std::max(1, n - 1), cfg);
    rep.matches_bad_fibers = true;
    for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
        if (c.kinds[i] != FiberKind::Bad) continue;
        rep.bad_charpolys.push_back(c.frobenius(i).cp);
        if (rep.bad_charpolys.back() != rep.P) rep.matches_bad_fibers = false;
    }
    check_fiber_purity(n, rep.q, FiberKind::Bad, rep.P, cfg.precision_bits);
    rep.root_magnitudes = reciprocal_root_magnitudes(rep.P, cfg.precision_bits);
    if (n % 2) rep.purity_error = max_relative_deviation(rep.P, target_magnitude(rep.q, n - 1), cfg.precision_bits);
    return rep;
}

}  // namespace dwork
