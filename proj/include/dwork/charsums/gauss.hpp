#pragma once
// Characters and Gauss sums G(k) = -sum_{a != 0} omega(a)^{-k} zeta_p^{Tr a}
// with omega(g^i) = exp(2 pi i i/(q-1)) for the view's generator h.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwork/charsums/fft.hpp"
#include "dwork/error.hpp"
#include "dwork/exactalg/hp.hpp"
#include "dwork/ffield/field.hpp"

namespace dwork {

enum class BuiltBy { Naive, Fft };

inline const char* to_string(BuiltBy b) { return b == BuiltBy::Naive ? "naive" : "fft"; }

// Tr(h^i) for i < q-1 over the view.
std::vector<int> trace_table(const FieldView& v);

template <class Real>
struct CharTable {
    FieldView view;
    int bits;
    Complex<Real> zeta_p;
    Complex<Real> zeta_q1;
    std::vector<Complex<Real>> zeta_p_pow;  // zeta_p^c, c < p
    RootTable<Real> roots;                  // (q-1)-th roots

    explicit CharTable(const FieldView& v)
        : view(v),
          bits(mantissa_bits<Real>()),
          zeta_p(unit_root<Real>(1, v.p())),
          zeta_q1(unit_root<Real>(1, static_cast<long long>(v.order()))),
          roots(v.order()) {
        for (int c = 0; c < v.p(); ++c) zeta_p_pow.push_back(unit_root<Real>(c, v.p()));
    }

    std::uint64_t order() const { return view.order(); }
    // omega(x)^k
    Complex<Real> omega_pow(FFElem x, std::int64_t k) const {
        const std::int64_t N = static_cast<std::int64_t>(order());
        std::int64_t l = static_cast<std::int64_t>(view.dlog(x) % N);
        std::int64_t kk = k % N;
        return roots(static_cast<std::int64_t>((static_cast<__int128>(l) * kk) % N));
    }
    Complex<Real> psi(FFElem x) const { return zeta_p_pow[view.trace(x)]; }
};

template <class Real>
struct GaussTable {
    int p = 0;
    int e = 0;
    std::uint64_t q = 0;
    int bits = 0;
    BuiltBy built_by = BuiltBy::Naive;
    std::vector<Complex<Real>> G;  // k = 0..q-2

    std::uint64_t order() const { return q - 1; }
    const Complex<Real>& operator()(std::int64_t k) const {
        const std::int64_t N = static_cast<std::int64_t>(q - 1);
        std::int64_t r = k % N;
        if (r < 0) r += N;
        return G[r];
    }
};

template <class Real>
Real gauss_tolerance(std::uint64_t q) {
    using std::pow;
    return Real(static_cast<long long>(q)) * pow(Real(2), 40 - mantissa_bits<Real>());
}

// Throws PrecisionLoss when G(0) != 1 or |G(k)|^2 != q beyond tolerance.
template <class Real>
void validate_gauss_table(const GaussTable<Real>& gt) {
    using std::abs;
    const Real tol = gauss_tolerance<Real>(gt.q);
    if (abs(gt.G[0].re - 1) > tol || abs(gt.G[0].im) > tol) throw PrecisionLoss("G(0) differs from 1");
    const Real Q(static_cast<long long>(gt.q));
    for (std::size_t k = 1; k < gt.G.size(); ++k)
        if (abs(norm(gt.G[k]) - Q) > tol)
            throw PrecisionLoss("|G(" + std::to_string(k) + ")|^2 differs from q by " + to_string_real(abs(norm(gt.G[k]) - Q), 6));
}

template <class Real>
GaussTable<Real> build_gauss_table(const CharTable<Real>& ct, std::uint64_t fft_threshold = 4096,
                                   std::optional<BuiltBy> force = std::nullopt) {
    const std::uint64_t N = ct.order();
    const auto tr = trace_table(ct.view);
    GaussTable<Real> gt;
    gt.p = ct.view.p();
    gt.e = ct.view.e();
    gt.q = ct.view.q();
    gt.bits = ct.bits;
    gt.built_by = force ? *force : (N > fft_threshold ? BuiltBy::Fft : BuiltBy::Naive);
    if (gt.built_by == BuiltBy::Fft) {
        std::vector<Complex<Real>> psi(N);
        for (std::uint64_t i = 0; i < N; ++i) psi[i] = ct.zeta_p_pow[tr[i]];
        gt.G = bluestein_dft(psi, -1);
        for (auto& z : gt.G) z = -z;
    } else {
        // bucket by trace value, then one multiplication per bucket
        const int p = ct.view.p();
        gt.G.resize(N);
        std::vector<Complex<Real>> acc(p);
        for (std::uint64_t k = 0; k < N; ++k) {
            for (auto& a : acc) a = Complex<Real>();
            std::uint64_t idx = 0;
            const std::uint64_t stepk = (N - k % N) % N;
            for (std::uint64_t i = 0; i < N; ++i) {
                acc[tr[i]] += ct.roots(static_cast<std::int64_t>(idx));
                idx += stepk;
                if (idx >= N) idx -= N;
            }
            Complex<Real> s;
            for (int c = 0; c < p; ++c) s += acc[c] * ct.zeta_p_pow[c];
            gt.G[k] = -s;
        }
    }
    validate_gauss_table(gt);
    return gt;
}

// Single Gauss sum by direct summation.
template <class Real>
Complex<Real> gauss_sum_at(const CharTable<Real>& ct, std::int64_t k) {
    const std::uint64_t N = ct.order();
    Complex<Real> s;
    for (std::uint64_t i = 0; i < N; ++i) {
        FFElem x = ct.view.elem(i);
        std::int64_t ex = -static_cast<std::int64_t>((static_cast<unsigned __int128>(((k % (std::int64_t)N) + N) % N) * i) % N);
        s += ct.roots(ex) * ct.zeta_p_pow[ct.view.trace(x)];
    }
    return -s;
}

// |zeta_p^{Tr a} - sum_k G(k) omega(a)^k / (1 - q)|
template <class Real>
Real check_inversion(const CharTable<Real>& ct, const GaussTable<Real>& gt, FFElem a) {
    if (a.code == 0) throw ZeroElement("inversion formula needs a != 0");
    const std::uint64_t N = ct.order();
    Complex<Real> s;
    for (std::uint64_t k = 0; k < N; ++k) s += gt.G[k] * ct.omega_pow(a, static_cast<std::int64_t>(k));
    s = s * (Real(1) / Real(1 - static_cast<long long>(gt.q)));
    return abs(ct.psi(a) - s);
}

// |G_{p^{dk}}(r(p^{dk}-1)) - G_{p^d}(r(p^d-1))^k| for r = j/(p^d-1), with the
// small field realised inside the big one so that omega_small(Norm x) equals
// omega_big(x)^{(Q-1)/(q-1)}.
long double hasse_davenport_check(int p, int d, int k, std::int64_t j, int bits = 128,
                                  std::uint64_t cap = std::uint64_t(1) << 24);

// Cached table build; the cache key hashes (p, m, modulus, generator, e, bits).
std::string gauss_cache_key(const FieldView& v, int bits);

template <class Real>
GaussTable<Real> gauss_table_cached(const FieldView& v, std::uint64_t fft_threshold, const std::string& cache_dir);

template <class Real>
void save_gauss_table(const GaussTable<Real>& gt, const FieldView& v, const std::string& path);
template <class Real>
std::optional<GaussTable<Real>> load_gauss_table(const FieldView& v, const std::string& path);

}  // namespace dwork
