#pragma once
// Roots of unity, radix-2 FFT and Bluestein's chirp-z DFT over Complex<Real>.

#include <cstdint>
#include <vector>

#include "dwork/exactalg/hp.hpp"

namespace dwork {

// exp(2 pi i j / N) for any j, from two tables of about sqrt(N) entries so
// that each value costs one multiplication and no trig call.
template <class Real>
class RootTable {
public:
    explicit RootTable(std::uint64_t N) : N_(N) {
        B_ = 1;
        while (B_ * B_ < N_) ++B_;
        lo_.reserve(B_);
        for (std::uint64_t j = 0; j < B_; ++j) lo_.push_back(unit_root<Real>(static_cast<long long>(j), static_cast<long long>(N_)));
        hi_.reserve(N_ / B_ + 1);
        for (std::uint64_t k = 0; k * B_ < N_; ++k)
            hi_.push_back(unit_root<Real>(static_cast<long long>(k * B_), static_cast<long long>(N_)));
    }
    std::uint64_t size() const { return N_; }
    Complex<Real> operator()(std::int64_t j) const {
        std::int64_t r = j % static_cast<std::int64_t>(N_);
        if (r < 0) r += N_;
        std::uint64_t u = static_cast<std::uint64_t>(r);
        return hi_[u / B_] * lo_[u % B_];
    }

private:
    std::uint64_t N_, B_;
    std::vector<Complex<Real>> lo_, hi_;
};

// In-place radix-2 transform, X_k = sum_j x_j exp(sign 2 pi i jk / M).
template <class Real>
void fft_pow2(std::vector<Complex<Real>>& a, int sign) {
    const std::size_t M = a.size();
    if (M <= 1) return;
    for (std::size_t i = 1, j = 0; i < M; ++i) {
        std::size_t bit = M >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    RootTable<Real> rt(M);
    std::vector<Complex<Real>> w(M / 2);
    for (std::size_t k = 0; k < M / 2; ++k) w[k] = rt(sign * static_cast<std::int64_t>(k));
    for (std::size_t len = 2; len <= M; len <<= 1) {
        const std::size_t half = len / 2, stride = M / len;
        for (std::size_t i = 0; i < M; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                Complex<Real> v = a[i + j + half] * w[j * stride];
                a[i + j + half] = a[i + j] - v;
                a[i + j] += v;
            }
        }
    }
}

// X_k = sum_{j<N} x_j exp(sign 2 pi i jk / N) for arbitrary N.
template <class Real>
std::vector<Complex<Real>> bluestein_dft(const std::vector<Complex<Real>>& x, int sign) {
    const std::uint64_t N = x.size();
    if (N == 0) return {};
    if (N == 1) return x;
    std::size_t M = 1;
    while (M < 2 * N - 1) M <<= 1;
    RootTable<Real> rt(2 * N);
    auto chirp = [&](std::uint64_t j) {
        std::uint64_t e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(j) * j) % (2 * N));
        return rt(sign * static_cast<std::int64_t>(e));
    };
    std::vector<Complex<Real>> a(M), b(M);
    for (std::uint64_t j = 0; j < N; ++j) {
        Complex<Real> c = chirp(j);
        a[j] = x[j] * c;
        b[j] = conj(c);
        if (j) b[M - j] = b[j];
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < M; ++i) a[i] *= b[i];
    b.clear();
    b.shrink_to_fit();
    fft_pow2(a, +1);
    const Real invM = Real(1) / Real(static_cast<long long>(M));
    std::vector<Complex<Real>> out(N);
    for (std::uint64_t k = 0; k < N; ++k) out[k] = chirp(k) * a[k] * invM;
    return out;
}

// Reference O(N^2) transform.
template <class Real>
std::vector<Complex<Real>> naive_dft(const std::vector<Complex<Real>>& x, int sign) {
    const std::uint64_t N = x.size();
    RootTable<Real> rt(N);
    std::vector<Complex<Real>> out(N);
    for (std::uint64_t k = 0; k < N; ++k) {
        Complex<Real> acc;
        for (std::uint64_t j = 0; j < N; ++j)
            acc += x[j] * rt(sign * static_cast<std::int64_t>((static_cast<unsigned __int128>(j) * k) % N));
        out[k] = acc;
    }
    return out;
}

}  // namespace dwork
