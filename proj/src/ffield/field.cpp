#include "dwork/ffield/field.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "dwork/error.hpp"

namespace dwork {

namespace {

using FpPoly = std::vector<std::int64_t>;  // lowest first, entries in [0, p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, std::int64_t p) {
    const int df = static_cast<int>(f.size()) - 1;  // f monic
    for (int i = static_cast<int>(a.size()) - 1; i >= df; --i) {
        std::int64_t t = a[i] % p;
        if (t == 0) continue;
        for (int j = 0; j <= df; ++j) a[i - df + j] = ((a[i - df + j] - t * f[j]) % p + p) % p;
    }
    if (static_cast<int>(a.size()) > df) a.resize(df);
    fp_trim(a);
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(c), f, p);
}

FpPoly fp_powmod(FpPoly b, std::uint64_t e, const FpPoly& f, std::int64_t p) {
    FpPoly r{1};
    b = fp_mod(std::move(b), f, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, b, f, p);
        e >>= 1;
        if (e) b = fp_mulmod(b, b, f, p);
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic then reduce
        std::int64_t li = inv_mod(b.back(), p);
        for (auto& x : b) x = x * li % p;
        a = fp_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool irreducible(const FpPoly& f, std::int64_t p) {
    const int m = static_cast<int>(f.size()) - 1;
    FpPoly x{0, 1};
    FpPoly xp = x;
    for (int i = 1; i <= m / 2; ++i) {
        xp = fp_powmod(xp, p, f, p);
        FpPoly d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool has_full_order(const FpPoly& gen, const FpPoly& f, std::int64_t p, std::uint64_t qm1,
                    const std::vector<std::uint64_t>& primes) {
    for (auto r : primes) {
        FpPoly t = fp_powmod(gen, qm1 / r, f, p);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    return true;
}

std::string cache_path(const std::string& dir, int p, int m, std::uint64_t seed) {
    return dir + "/field_p" + std::to_string(p) + "_m" + std::to_string(m) + "_s" + std::to_string(seed) + ".json";
}

}  // namespace

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw CapExceeded("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (d > bound) throw FactoringTooHard("cofactor " + std::to_string(n) + " exceeds trial-division bound");
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<int, int> prime_power(std::uint64_t q) {
    if (q < 2) throw InvalidArgument("not a prime power: " + std::to_string(q));
    std::uint64_t p = prime_factors(q).front();
    int m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw InvalidArgument("not a prime power: " + std::to_string(q));
    return {static_cast<int>(p), m};
}

FieldCtx build_field(int p, int m, std::uint64_t seed, std::uint64_t cap, const std::string& cache_dir) {
    if (p < 2 || !is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidArgument("extension degree must be >= 1");
    std::uint64_t q;
    try {
        q = upow(p, m);
    } catch (const CapExceeded&) {
        throw CapExceeded("p^m overflows");
    }
    if (q > cap) throw CapExceeded("q = " + std::to_string(p) + "^" + std::to_string(m) + " = " + std::to_string(q) +
                                   " exceeds field cap " + std::to_string(cap));
    if (q > (std::uint64_t(1) << 31)) throw CapExceeded("q beyond 2^31 is not supported by the table layout");
    const std::uint64_t qm1 = q - 1;
    const auto primes = prime_factors(qm1);

    FieldCtx ctx;
    ctx.p = p;
    ctx.m = m;
    ctx.q = q;
    ctx.seed = seed;

    FpPoly f, gen;
    bool loaded = false;
    if (!cache_dir.empty()) {
        std::ifstream in(cache_path(cache_dir, p, m, seed));
        if (in) {
            try {
                auto j = nlohmann::json::parse(in);
                if (j.at("version") == 1 && j.at("p") == p && j.at("m") == m && j.at("seed") == seed) {
                    f = j.at("modulus_coeffs").get<FpPoly>();
                    gen = j.at("generator_coeffs").get<FpPoly>();
                    fp_trim(gen);
                    loaded = f.size() == std::size_t(m + 1) && f.back() == 1 && irreducible(f, p) &&
                             has_full_order(gen, f, p, qm1, primes);
                }
            } catch (const std::exception&) {
                loaded = false;
            }
        }
    }
    if (!loaded) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(p) * 1000003ULL + std::uint64_t(m));
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000000) throw NonConvergence("no primitive modulus found");
            f.assign(m + 1, 0);
            f[m] = 1;
            if (m == 1) {
                std::int64_t c = p == 2 ? 1 : 1 + static_cast<std::int64_t>(rng() % (p - 1));
                f[0] = (p - c) % p;  // X - c
                gen = {c};
            } else {
                for (int i = 0; i < m; ++i) f[i] = static_cast<std::int64_t>(rng() % p);
                if (f[0] == 0) continue;
                if (!irreducible(f, p)) continue;
                gen = {0, 1};
            }
            if (has_full_order(gen, f, p, qm1, primes)) break;
        }
        if (!cache_dir.empty()) {
            std::filesystem::create_directories(cache_dir);
            nlohmann::json j = {{"version", 1}, {"p", p}, {"m", m}, {"seed", seed},
                                {"modulus_coeffs", f}, {"generator_coeffs", gen}};
            std::ofstream(cache_path(cache_dir, p, m, seed)) << j.dump() << "\n";
        }
    }
    ctx.modulus.assign(f.begin(), f.end());

    ctx.pw_.resize(m + 1);
    ctx.pw_[0] = 1;
    for (int i = 1; i <= m; ++i) ctx.pw_[i] = ctx.pw_[i - 1] * p;
    auto code_of = [&](const FpPoly& a) {
        std::uint32_t c = 0;
        for (int i = static_cast<int>(std::min<std::size_t>(a.size(), m)) - 1; i >= 0; --i) c = c * p + a[i];
        return c;
    };
    ctx.g = {code_of(gen)};

    ctx.exp_.resize(qm1);
    ctx.log_.assign(q, -1);
    const bool gen_is_x = m > 1 && gen.size() == 2 && gen[0] == 0 && gen[1] == 1;
    std::vector<std::int64_t> cur(m, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < qm1; ++i) {
        std::uint32_t c = code_of(cur);
        if (ctx.log_[c] != -1) throw Mismatch("generator order below q-1 while building tables");
        ctx.exp_[i] = c;
        ctx.log_[c] = static_cast<std::int32_t>(i);
        if (gen_is_x) {
            std::int64_t t = cur[m - 1];
            for (int j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (t)
                for (int j = 0; j < m; ++j) cur[j] = ((cur[j] - t * f[j]) % p + p) % p;
        } else {
            FpPoly a(cur.begin(), cur.end());
            fp_trim(a);
            a = fp_mulmod(a, gen, f, p);
            a.resize(m, 0);
            cur.assign(a.begin(), a.end());
        }
    }
    if (code_of(cur) != 1) throw Mismatch("g^(q-1) != 1");

    // Tr(X^j) by the definition sum_i (X^j)^{p^i}
    ctx.trace_basis_.resize(m);
    for (int j = 0; j < m; ++j) {
        FFElem xj = ctx.from_coeffs([&] {
            std::vector<int> v(m, 0);
            v[j] = 1;
            return v;
        }());
        ctx.trace_basis_[j] = ctx.trace_by_definition(xj);
    }
    return ctx;
}

FFElem FieldCtx::from_int(long long v) const {
    long long r = v % p;
    if (r < 0) r += p;
    return {static_cast<std::uint32_t>(r)};
}

FFElem FieldCtx::from_coeffs(const std::vector<int>& c) const {
    std::uint32_t code = 0;
    for (int i = std::min<int>(m, c.size()) - 1; i >= 0; --i) code = code * p + static_cast<std::uint32_t>(((c[i] % p) + p) % p);
    return {code};
}

std::vector<int> FieldCtx::coeffs(FFElem x) const {
    std::vector<int> c(m);
    std::uint32_t v = x.code;
    for (int i = 0; i < m; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

FFElem FieldCtx::add(FFElem a, FFElem b) const {
    if (p == 2) return {a.code ^ b.code};
    if (m == 1) return {static_cast<std::uint32_t>((a.code + b.code) % p)};
    std::uint32_t r = 0, x = a.code, y = b.code;
    for (int i = 0; i < m; ++i) {
        std::uint32_t d = x % p + y % p;
        if (d >= static_cast<std::uint32_t>(p)) d -= p;
        r += d * pw_[i];
        x /= p;
        y /= p;
    }
    return {r};
}

FFElem FieldCtx::neg(FFElem a) const {
    if (p == 2) return a;
    std::uint32_t r = 0, x = a.code;
    for (int i = 0; i < m; ++i) {
        std::uint32_t d = x % p;
        r += (d ? p - d : 0) * pw_[i];
        x /= p;
    }
    return {r};
}

FFElem FieldCtx::sub(FFElem a, FFElem b) const { return add(a, neg(b)); }

FFElem FieldCtx::mul(FFElem a, FFElem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    std::uint64_t s = std::uint64_t(log_[a.code]) + std::uint64_t(log_[b.code]);
    if (s >= q - 1) s -= q - 1;
    return {exp_[s]};
}

FFElem FieldCtx::inv(FFElem a) const {
    if (a.code == 0) throw ZeroElement("inverse of zero");
    std::uint64_t l = log_[a.code];
    return {exp_[l == 0 ? 0 : q - 1 - l]};
}

FFElem FieldCtx::pow(FFElem a, std::uint64_t e) const {
    if (a.code == 0) return e == 0 ? one() : zero();
    return {exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a.code]) * e) % (q - 1))]};
}

std::uint32_t FieldCtx::dlog(FFElem x) const {
    if (!has_table()) throw NoTable("no discrete-log table");
    if (x.code == 0) throw ZeroElement("dlog of zero");
    return static_cast<std::uint32_t>(log_[x.code]);
}

int FieldCtx::trace(FFElem x) const {
    long long s = 0;
    std::uint32_t v = x.code;
    for (int j = 0; j < m; ++j) {
        s += static_cast<long long>(v % p) * trace_basis_[j];
        v /= p;
    }
    return static_cast<int>(s % p);
}

int FieldCtx::trace_by_definition(FFElem x) const {
    FFElem s = zero(), y = x;
    for (int i = 0; i < m; ++i) {
        s = add(s, y);
        y = pow(y, p);
    }
    if (s.code >= static_cast<std::uint32_t>(p)) throw Mismatch("trace left the prime field");
    return static_cast<int>(s.code);
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << p << "^" << m << " modulus [";
    for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
    os << "] g=" << g.code;
    return os.str();
}

int trace_to_prime(const FieldCtx& ctx, FFElem x) { return ctx.trace(x); }

std::uint32_t dlog(const FieldCtx& ctx, FFElem x) { return ctx.dlog(x); }

FieldView::FieldView(const FieldCtx& ctx, int e) : ctx_(&ctx), e_(e) {
    if (e < 1 || ctx.m % e != 0)
        throw NotADivisor(std::to_string(e) + " does not divide " + std::to_string(ctx.m));
    qe_ = upow(ctx.p, e);
    step_ = (ctx.q - 1) / (qe_ - 1);
}

std::vector<FFElem> FieldView::elements() const {
    std::vector<FFElem> out;
    out.reserve(qe_);
    out.push_back(ctx_->zero());
    for (std::uint64_t i = 0; i + 1 < qe_; ++i) out.push_back(elem(i));
    return out;
}

bool FieldView::contains(FFElem x) const { return x.code == 0 || ctx_->dlog(x) % step_ == 0; }

std::uint64_t FieldView::dlog(FFElem x) const {
    std::uint64_t l = ctx_->dlog(x);
    if (l % step_ != 0) throw InvalidArgument("element is not in the subfield");
    return l / step_;
}

int FieldView::trace(FFElem x) const {
    if (e_ == ctx_->m) return ctx_->trace(x);
    FFElem s = ctx_->zero(), y = x;
    for (int i = 0; i < e_; ++i) {
        s = ctx_->add(s, y);
        y = ctx_->pow(y, ctx_->p);
    }
    return static_cast<int>(s.code);
}

int FieldView::quadratic_char(FFElem x) const {
    if (x.code == 0) return 0;
    if (ctx_->p == 2) return 1;
    return dlog(x) % 2 == 0 ? 1 : -1;
}

std::vector<FFElem> subfield_elements(const FieldCtx& ctx, int e) { return FieldView(ctx, e).elements(); }

}  // namespace dwork
