#include "dwork/counting/counting.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "dwork/error.hpp"
#include "dwork/exactalg/charpoly.hpp"
#include "dwork/exactalg/roots.hpp"

namespace dwork {

namespace {

BigInt torus_base(std::uint64_t q, int n) {
    // ((q-1)^n - (-1)^n)/q, always an integer
    BigInt a = ipow(BigInt(static_cast<unsigned long>(q - 1)), n) - (n % 2 ? -1 : 1);
    BigInt Q(static_cast<unsigned long>(q));
    if (a % Q != 0) throw Mismatch("torus base term not integral");
    return a / Q;
}

template <class Real>
bool near_multiple(const Complex<Real>& y, const Real& M, Real& quotient) {
    using std::abs;
    using std::round;
    quotient = round(y.re / M);
    return abs(y.im) < Real(1e-6) && abs(y.re - quotient * M) < Real(1e-6);
}

std::uint64_t minus_one_log(const FieldView& v) { return v.p() == 2 ? 0 : v.order() / 2; }

}  // namespace

std::uint64_t view_index(const FieldView& v, FFElem x) { return x.code == 0 ? 0 : 1 + v.dlog(x); }

std::int64_t torus_size(std::uint64_t q, int n) {
    long double t = std::pow(static_cast<long double>(q - 1), n);
    if (t >= std::ldexp(1.0L, 62)) throw CapExceeded("(q-1)^n too large for 64-bit counts");
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) r *= static_cast<std::int64_t>(q - 1);
    return r;
}

std::vector<std::int64_t> bruteforce_all_fibers(const FieldView& v, int n, std::uint64_t work_cap) {
    if (n < 1) throw InvalidArgument("n must be positive");
    const FieldCtx& F = v.ctx();
    const std::uint64_t N = v.order();
    long double work = std::pow(static_cast<long double>(N), n);
    if (work > static_cast<long double>(work_cap))
        throw WorkCapExceeded("enumerating " + std::to_string(N) + "^" + std::to_string(n) + " tuples exceeds the work cap");

    std::vector<FFElem> el(N), inv(N);
    for (std::uint64_t i = 0; i < N; ++i) {
        el[i] = v.elem(i);
        inv[i] = v.elem((N - i) % N);
    }
    std::vector<std::int64_t> hist(F.q, 0);
    std::vector<FFElem> s(n + 1);
    std::vector<std::uint64_t> L(n + 1, 0);
    std::function<void(int)> rec = [&](int d) {
        if (d == n) {
            ++hist[F.add(s[n], inv[L[n]]).code];
            return;
        }
        std::uint64_t l = L[d];
        for (std::uint64_t i = 0; i < N; ++i) {
            s[d + 1] = F.add(s[d], el[i]);
            L[d + 1] = l;
            rec(d + 1);
            if (++l == N) l = 0;
        }
    };
    rec(0);

    std::vector<std::int64_t> out(N + 1);
    out[0] = hist[0];
    for (std::uint64_t i = 0; i < N; ++i) out[i + 1] = hist[el[i].code];
    return out;
}

FiberCount count_bruteforce(const FieldView& v, int n, FFElem lambda, std::uint64_t work_cap) {
    if (!v.contains(lambda)) throw InvalidArgument("lambda is not in the counting field");
    auto all = bruteforce_all_fibers(v, n, work_cap);
    FiberCount fc{lambda, v.p(), v.e(), v.q(), n, BigInt(static_cast<long>(all[view_index(v, lambda)])), CountMethod::Brute};
    return fc;
}

template <class Real>
FiberCount count_gauss(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n, FFElem lambda) {
    const FieldView& v = ct.view;
    if (lambda.code == 0) throw ZeroElement("count_gauss needs lambda != 0; use count_gauss_zero");
    const std::int64_t N = static_cast<std::int64_t>(v.order());
    const std::uint64_t q = v.q();
    const std::int64_t u = static_cast<std::int64_t>((v.dlog(lambda) + minus_one_log(v)) % v.order());
    const FFElem minus_lambda = v.ctx().neg(lambda);

    Complex<Real> S, S_rewrite;
    for (std::int64_t a = 1; a < N; ++a) {
        std::int64_t b = (-(static_cast<std::int64_t>(n) + 1) * a) % N;
        if (b < 0) b += N;
        Complex<Real> ga = cpow(gt(a), static_cast<unsigned long long>(n + 1));
        S += ga * gt(b) * ct.roots(static_cast<std::int64_t>((static_cast<__int128>(b) * u) % N));
        S_rewrite += ga * gt(-(n + 1) * a) * ct.omega_pow(minus_lambda, -(n + 1) * a);
    }
    using std::abs;
    if (abs(S - S_rewrite) > Real(1e-6) * (1 + abs(S))) throw PrecisionLoss("double sum and single-index rewrite disagree");

    const Real Q = Real(static_cast<long long>(q));
    Complex<Real> y = (Complex<Real>{Q, Real(0)} + S) * Real(n % 2 ? -1 : 1);
    Real z;
    if (!near_multiple(y, Q * (Q - 1), z))
        throw PrecisionLoss("Gauss-sum count is not within 1e-6 of an integer (Im " + to_string_real(y.im, 6) + ")");
    FiberCount fc{lambda, v.p(), v.e(), q, n, torus_base(q, n) + round_to_mpz(z), CountMethod::Gauss};
    return fc;
}

template <class Real>
FiberCount count_gauss_zero(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n) {
    const FieldView& v = ct.view;
    const std::int64_t N = static_cast<std::int64_t>(v.order());
    const std::uint64_t q = v.q();
    std::int64_t m = n + 1;
    while (m % v.p() == 0) m /= v.p();
    Complex<Real> S;
    for (std::int64_t k = 1; k < N; ++k)
        if ((static_cast<__int128>(m) * k) % N == 0) S += cpow(gt(k), static_cast<unsigned long long>(n + 1));
    Complex<Real> y = S * Real(n % 2 ? 1 : -1);
    Real z;
    if (!near_multiple(y, Real(static_cast<long long>(q)), z))
        throw PrecisionLoss("zero-fiber Gauss sum is not within 1e-6 of a multiple of q");
    FiberCount fc{v.ctx().zero(), v.p(), v.e(), q, n, torus_base(q, n) + round_to_mpz(z), CountMethod::Gauss};
    return fc;
}

template <class Real>
std::vector<std::int64_t> gauss_all_fibers(const CharTable<Real>& ct, const GaussTable<Real>& gt, int n) {
    const FieldView& v = ct.view;
    const std::int64_t N = static_cast<std::int64_t>(v.order());
    const std::uint64_t q = v.q();
    torus_size(q, n);
    std::vector<Complex<Real>> Fb(N);
    for (std::int64_t a = 1; a < N; ++a) {
        std::int64_t b = (-(static_cast<std::int64_t>(n) + 1) * a) % N;
        if (b < 0) b += N;
        Fb[b] += cpow(gt(a), static_cast<unsigned long long>(n + 1)) * gt(b);
    }
    // Y[u] = sum_b F[b] zeta^{bu}, u = dlog(-lambda)
    auto Y = N > 64 ? bluestein_dft(Fb, +1) : naive_dft(Fb, +1);
    const Real Q = Real(static_cast<long long>(q));
    const Real M = Q * (Q - 1);
    const std::int64_t base = torus_base(q, n).get_si();
    const std::uint64_t shift = minus_one_log(v);
    std::vector<std::int64_t> out(N + 1);
    out[0] = count_gauss_zero(ct, gt, n).N.get_si();
    for (std::int64_t i = 0; i < N; ++i) {
        std::uint64_t u = (static_cast<std::uint64_t>(i) + shift) % N;
        Complex<Real> y = (Complex<Real>{Q, Real(0)} + Y[u]) * Real(n % 2 ? -1 : 1);
        Real z;
        if (!near_multiple(y, M, z))
            throw PrecisionLoss("bulk Gauss-sum count for lambda = h^" + std::to_string(i) + " not within 1e-6 of an integer");
        out[i + 1] = base + round_to_mpz(z).get_si();
    }
    return out;
}

#define DWORK_INST(R)                                                                              \
    template FiberCount count_gauss<R>(const CharTable<R>&, const GaussTable<R>&, int, FFElem);  \
    template FiberCount count_gauss_zero<R>(const CharTable<R>&, const GaussTable<R>&, int);     \
    template std::vector<std::int64_t> gauss_all_fibers<R>(const CharTable<R>&, const GaussTable<R>&, int);
DWORK_INST(Real64)
DWORK_INST(Real128)
DWORK_INST(Real256)
#undef DWORK_INST

std::vector<std::int64_t> all_fiber_counts(const FieldView& v, int n, const RunConfig& cfg, CountMethod* used) {
    const std::int64_t total = torus_size(v.q(), n);
    if (static_cast<std::uint64_t>(total) <= std::min(cfg.brute_bulk_limit, cfg.work_cap)) {
        if (used) *used = CountMethod::Brute;
        return bruteforce_all_fibers(v, n, cfg.work_cap);
    }
    if (used) *used = CountMethod::Gauss;
    return with_precision_retry(cfg.precision_bits, [&]<class Real>() {
        CharTable<Real> ct(v);
        auto gt = gauss_table_cached<Real>(v, cfg.fft_threshold, cfg.cache_dir);
        return gauss_all_fibers(ct, gt, n);
    });
}

FiberCount count_fiber(const FieldView& v, int n, FFElem lambda, const RunConfig& cfg, CountMethod method) {
    if (method == CountMethod::Brute) return count_bruteforce(v, n, lambda, cfg.work_cap);
    return with_precision_retry(cfg.precision_bits, [&]<class Real>() {
        CharTable<Real> ct(v);
        auto gt = gauss_table_cached<Real>(v, cfg.fft_threshold, cfg.cache_dir);
        return lambda.code == 0 ? count_gauss_zero(ct, gt, n) : count_gauss(ct, gt, n, lambda);
    });
}

BigInt s_triv(int n, const BigInt& q) {
    BigInt s = 0;
    for (int j = n; j <= 2 * n - 2; ++j) {
        BigInt t = binom(n, j - n + 2) * ipow(q, j - n + 1);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

BigRat frob_trace(int n, const BigInt& q_level, const BigInt& N) {
    BigInt d = N - s_triv(n, q_level);
    if (n % 2 == 0) d = -d;
    return BigRat(d - n);
}

BigInt count_from_trace(int n, const BigInt& q_level, const BigInt& t) {
    BigInt x = t + n;
    if (n % 2 == 0) x = -x;
    return s_triv(n, q_level) + x;
}

const char* to_string(FiberKind k) {
    switch (k) {
        case FiberKind::Good: return "good";
        case FiberKind::Bad: return "bad";
        default: return "zero_fiber_wild";
    }
}

FiberKind classify_fiber(const FieldView& v, int n, FFElem lambda) {
    const FieldCtx& F = v.ctx();
    if ((n + 1) % v.p() == 0) return lambda.code == 0 ? FiberKind::ZeroWild : FiberKind::Good;
    FFElem c = F.pow(F.from_int(n + 1), n + 1);
    return F.pow(lambda, n + 1) == c ? FiberKind::Bad : FiberKind::Good;
}

int det_sign(const FieldView& v, int n, FFElem lambda) {
    if (n % 2 == 0 || (n + 1) % v.p() == 0) return 1;
    const FieldCtx& F = v.ctx();
    FFElem u = F.sub(F.pow(lambda, n + 1), F.pow(F.from_int(n + 1), n + 1));
    return v.quadratic_char(u);
}

void check_fiber_purity(int n, const BigInt& q, FiberKind kind, const Poly& cp, int bits) {
    const long double qd = q.get_d();
    auto pure = [&](const Poly& f, int weight, const char* what) {
        if (f.degree() <= 0) return;
        long double target = std::pow(qd, weight / 2.0L);
        long double dev = max_relative_deviation(f, target, bits);
        if (dev > 1e-6L)
            throw PurityViolation(std::string(what) + ": relative deviation " + std::to_string((double)dev) + " from q^" +
                                  std::to_string(weight) + "/2 at q = " + q.get_str());
    };
    if (kind == FiberKind::Good) {
        if (cp.degree() != n) throw PurityViolation("good fiber charpoly has degree " + std::to_string(cp.degree()));
        pure(cp, n - 1, "good fiber");
        return;
    }
    if (kind == FiberKind::ZeroWild) throw HypothesisViolated("no purity statement for the wild zero fiber");
    if (cp.degree() != n - 1) throw PurityViolation("bad fiber charpoly has degree " + std::to_string(cp.degree()));
    if (n % 2) {
        pure(cp, n - 1, "bad fiber");
        return;
    }
    BigInt s = ipow(q, (n - 2) / 2);
    int found = 0;
    Poly rest;
    for (int sg : {1, -1}) {
        Poly lin = Poly::one_minus(BigRat(s * sg));
        auto [quo, rem] = divmod(cp, lin);
        if (rem.is_zero()) {
            ++found;
            rest = quo;
        }
    }
    if (found != 1) throw PurityViolation("bad fiber lacks the eigenvalue +-q^{(n-2)/2}");
    // the remaining roots may not repeat the drop eigenvalue
    for (int sg : {1, -1})
        if (divmod(rest, Poly::one_minus(BigRat(s * sg))).second.is_zero() && rest.degree() > 0)
            throw PurityViolation("weight-drop eigenvalue repeated at a bad fiber");
    pure(rest, n - 1, "bad fiber (pure part)");
}

FrobeniusData fiber_charpoly(int n, const BigInt& q, FiberKind kind, int dsign, const std::vector<BigInt>& counts,
                             bool check_purity, int bits) {
    if (kind == FiberKind::ZeroWild) throw HypothesisViolated("lambda = 0 with p | n+1 is wildly ramified; count it directly");
    std::vector<BigRat> ps;
    for (std::size_t j = 0; j < counts.size(); ++j) ps.push_back(frob_trace(n, ipow(q, static_cast<int>(j + 1)), counts[j]));
    FrobeniusData fd;
    fd.level_q = q;
    fd.n = n;
    fd.kind = kind;
    if (kind == FiberKind::Good) {
        if (dsign == 0) throw InvalidArgument("good fiber with vanishing determinant character");
        BigRat det(ipow(q, n * (n - 1) / 2) * dsign);
        fd.cp = power_sums_to_charpoly(ps, n, det);
    } else {
        if (static_cast<int>(ps.size()) < n - 1) throw InvalidArgument("bad fiber needs n-1 levels");
        fd.cp = power_sums_to_charpoly(ps, n - 1);
    }
    if (check_purity) check_fiber_purity(n, q, kind, fd.cp, bits);
    return fd;
}

FrobeniusData fiber_charpoly(const FieldView& v, int n, FFElem lambda, const std::vector<BigInt>& counts,
                             bool check_purity, int bits) {
    FiberKind kind = classify_fiber(v, n, lambda);
    int sg = kind == FiberKind::Good ? det_sign(v, n, lambda) : 1;
    auto fd = fiber_charpoly(n, BigInt(static_cast<unsigned long>(v.q())), kind, sg, counts, check_purity, bits);
    fd.lambda = lambda;
    return fd;
}

std::vector<BigInt> LevelCensus::counts_of(std::size_t i) const {
    std::vector<BigInt> c;
    for (const auto& lvl : counts) c.emplace_back(static_cast<long>(lvl[i]));
    return c;
}

FrobeniusData LevelCensus::frobenius(std::size_t i, bool check_purity, int bits) const {
    auto fd = fiber_charpoly(n, Q, kinds[i], det_signs[i], counts_of(i), check_purity, bits);
    fd.lambda = lambdas[i];
    return fd;
}

LevelCensus build_census(int n, int p, int m0, int k, int J, const RunConfig& cfg) {
    if (J < 1 || k < 1) throw InvalidArgument("census needs k, J >= 1");
    LevelCensus c;
    c.n = n;
    c.p = p;
    c.m0 = m0;
    c.k = k;
    c.J = J;
    c.Q = ipow(BigInt(p), m0 * k);
    int L = 1;
    for (int j = 2; j <= J; ++j) L = std::lcm(L, j);
    c.field = std::make_shared<const FieldCtx>(build_field(p, m0 * k * L, cfg.seed, cfg.field_cap, cfg.cache_dir));
    FieldView base(*c.field, m0 * k);
    c.lambdas = base.elements();
    for (FFElem l : c.lambdas) {
        c.kinds.push_back(classify_fiber(base, n, l));
        c.det_signs.push_back(c.kinds.back() == FiberKind::Good ? det_sign(base, n, l) : 1);
    }
    for (int j = 1; j <= J; ++j) {
        FieldView vj(*c.field, m0 * k * j);
        CountMethod used;
        auto all = all_fiber_counts(vj, n, cfg, &used);
        std::vector<std::int64_t> lvl;
        lvl.reserve(c.lambdas.size());
        for (FFElem l : c.lambdas) lvl.push_back(all[view_index(vj, l)]);
        c.counts.push_back(std::move(lvl));
        c.methods.push_back(used);
    }
    return c;
}

const char* to_string(MomentMethod m) {
    switch (m) {
        case MomentMethod::Direct: return "direct";
        case MomentMethod::Charpoly: return "charpoly";
        case MomentMethod::Both: return "both";
        default: return "auto";
    }
}

MomentMethod parse_moment_method(const std::string& s) {
    if (s == "direct") return MomentMethod::Direct;
    if (s == "charpoly") return MomentMethod::Charpoly;
    if (s == "both") return MomentMethod::Both;
    if (s == "auto") return MomentMethod::Auto;
    throw InvalidArgument("unknown moment method '" + s + "'");
}

std::vector<BigInt> moment_counts_from_census(const std::vector<LevelCensus>& census, int d) {
    std::vector<BigInt> out;
    for (const auto& c : census) {
        const int n = c.n;
        BigInt Qd = ipow(c.Q, d);
        BigInt triv = s_triv(n, Qd);
        BigRat acc = 0;
        for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
            if (c.kinds[i] == FiberKind::ZeroWild)
                throw HypothesisViolated("charpoly method excludes lambda = 0 when p | n+1");
            BigRat pd = charpoly_power_sum(c.frobenius(i).cp, d);
            BigRat x = BigRat(n) + pd;
            if (n % 2 == 0) x = -x;
            acc += BigRat(triv) + x;
        }
        if (!is_integer(acc)) throw Mismatch("charpoly moment count is not an integer");
        out.push_back(acc.get_num());
    }
    return out;
}

MomentSeriesSpec moment_counts(int n, std::uint64_t q, int d, int K, MomentMethod method, const RunConfig& cfg) {
    auto [p, m0] = prime_power(q);
    if (d < 1 || K < 1) throw InvalidArgument("moment_counts needs d, K >= 1");
    const bool wild = (n + 1) % p == 0;
    if (method == MomentMethod::Auto) method = wild ? MomentMethod::Direct : MomentMethod::Charpoly;
    if (wild && (method == MomentMethod::Charpoly || method == MomentMethod::Both))
        throw HypothesisViolated("charpoly method requires p not dividing n+1");

    MomentSeriesSpec spec;
    spec.n = n;
    spec.p = p;
    spec.m0 = m0;
    spec.d = d;
    spec.K = K;
    spec.q = BigInt(static_cast<unsigned long>(q));
    spec.method = method;

    std::vector<BigInt> direct, viacp;
    if (method == MomentMethod::Direct || method == MomentMethod::Both) {
        for (int k = 1; k <= K; ++k) {
            FieldCtx F = build_field(p, m0 * d * k, cfg.seed, cfg.field_cap, cfg.cache_dir);
            FieldView whole(F, F.m), sub(F, m0 * k);
            auto all = all_fiber_counts(whole, n, cfg);
            BigInt s = 0;
            for (FFElem l : sub.elements()) s += BigInt(static_cast<long>(all[view_index(whole, l)]));
            direct.push_back(s);
            spec.fields_used.push_back(F.describe());
        }
    }
    if (method == MomentMethod::Charpoly || method == MomentMethod::Both) {
        std::vector<LevelCensus> cens;
        const int J = std::max(1, n - 1);
        for (int k = 1; k <= K; ++k) {
            cens.push_back(build_census(n, p, m0, k, J, cfg));
            spec.fields_used.push_back(cens.back().field->describe());
        }
        viacp = moment_counts_from_census(cens, d);
    }
    if (method == MomentMethod::Both) {
        for (int k = 0; k < K; ++k)
            if (direct[k] != viacp[k])
                throw MethodMismatch("N_" + std::to_string(d) + "(" + std::to_string(k + 1) + "): direct " + direct[k].get_str() +
                                     " != charpoly " + viacp[k].get_str());
    }
    spec.counts = method == MomentMethod::Charpoly ? viacp : direct;
    return spec;
}

}  // namespace dwork
