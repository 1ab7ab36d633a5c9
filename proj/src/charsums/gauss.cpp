#include "dwork/charsums/gauss.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "dwork/util/sha256.hpp"

namespace dwork {

std::vector<int> trace_table(const FieldView& v) {
    const std::uint64_t N = v.order();
    std::vector<int> tr(N);
    for (std::uint64_t i = 0; i < N; ++i) tr[i] = v.trace(v.elem(i));
    return tr;
}

long double hasse_davenport_check(int p, int d, int k, std::int64_t j, int bits, std::uint64_t cap) {
    if (d < 1 || k < 1) throw InvalidArgument("hasse_davenport_check needs d, k >= 1");
    FieldCtx big = build_field(p, d * k, 0, cap);
    FieldView small(big, d), whole(big, d * k);
    const std::uint64_t qs = small.q(), Q = whole.q();
    // explicit norm: prod_{i<k} g^{qs^i} must be the subfield generator
    FFElem nrm = big.one();
    for (int i = 0; i < k; ++i) nrm = big.mul(nrm, big.pow(big.g, upow(qs, i)));
    if (nrm != small.embed_gen()) throw Mismatch("Norm(g) is not the subfield generator");
    const std::int64_t Ns = static_cast<std::int64_t>(qs - 1);
    const std::int64_t js = ((j % Ns) + Ns) % Ns;
    const std::int64_t jb = static_cast<std::int64_t>(js * static_cast<std::int64_t>((Q - 1) / (qs - 1)));
    return with_precision(bits, [&]<class Real>() {
        CharTable<Real> cs(small), cb(whole);
        Complex<Real> gs = gauss_sum_at(cs, js);
        Complex<Real> gb = gauss_sum_at(cb, jb);
        return to_ld(abs(gb - cpow(gs, static_cast<unsigned long long>(k))));
    });
}

std::string gauss_cache_key(const FieldView& v, int bits) {
    const FieldCtx& c = v.ctx();
    std::string s = "gauss-v1|p=" + std::to_string(c.p) + "|m=" + std::to_string(c.m) + "|mod=";
    for (int x : c.modulus) s += std::to_string(x) + ",";
    s += "|g=" + std::to_string(c.g.code) + "|e=" + std::to_string(v.e()) + "|bits=" + std::to_string(bits);
    return sha256_hex(s);
}

namespace {

template <class T>
void put(std::string& out, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.append(buf, sizeof(T));
}

template <class T>
bool get(const std::string& in, std::size_t& pos, T& v) {
    if (pos + sizeof(T) > in.size()) return false;
    std::memcpy(&v, in.data() + pos, sizeof(T));
    pos += sizeof(T);
    return true;
}

// sign byte, int32 exponent, mantissa of bits/8 bytes little-endian:
// x = M * 2^(exp - bits)
template <class Real>
void encode_real(std::string& out, const Real& x) {
    constexpr int B = mantissa_bits<Real>();
    std::string mant(B / 8, '\0');
    std::int32_t ex = 0;
    std::uint8_t sign = x < 0 ? 1 : 0;
    if (x != 0) {
        int e = 0;
        if constexpr (std::is_same_v<Real, long double>) {
            long double f = std::frexp(std::fabs(x), &e);
            std::uint64_t M = static_cast<std::uint64_t>(std::ldexp(f, 64));
            std::memcpy(mant.data(), &M, 8);
        } else {
            Real f = frexp(abs(x), &e);
            bmp::cpp_int M = ldexp(f, B).template convert_to<bmp::cpp_int>();
            std::vector<unsigned char> bytes;
            bmp::export_bits(M, std::back_inserter(bytes), 8, false);
            std::memcpy(mant.data(), bytes.data(), std::min<std::size_t>(bytes.size(), mant.size()));
        }
        ex = e;
    }
    put(out, sign);
    put(out, ex);
    out += mant;
}

template <class Real>
bool decode_real(const std::string& in, std::size_t& pos, Real& x) {
    constexpr int B = mantissa_bits<Real>();
    std::uint8_t sign;
    std::int32_t ex;
    if (!get(in, pos, sign) || !get(in, pos, ex) || pos + B / 8 > in.size()) return false;
    if constexpr (std::is_same_v<Real, long double>) {
        std::uint64_t M;
        std::memcpy(&M, in.data() + pos, 8);
        x = std::ldexp(static_cast<long double>(M), ex - 64);
    } else {
        bmp::cpp_int M;
        bmp::import_bits(M, in.begin() + pos, in.begin() + pos + B / 8, 8, false);
        x = ldexp(Real(M), ex - B);
    }
    pos += B / 8;
    if (sign) x = -x;
    return true;
}

std::string header(const FieldView& v, int bits, std::uint64_t N) {
    const FieldCtx& c = v.ctx();
    std::string h = "DWGT";
    put<std::uint32_t>(h, 1);
    put<std::uint32_t>(h, c.p);
    put<std::uint32_t>(h, c.m);
    put<std::uint32_t>(h, v.e());
    put<std::uint32_t>(h, bits);
    put<std::uint32_t>(h, static_cast<std::uint32_t>(c.modulus.size()));
    for (int x : c.modulus) put<std::uint32_t>(h, x);
    put<std::uint32_t>(h, c.g.code);
    put<std::uint64_t>(h, N);
    return h;
}

}  // namespace

template <class Real>
void save_gauss_table(const GaussTable<Real>& gt, const FieldView& v, const std::string& path) {
    std::string out = header(v, gt.bits, gt.G.size());
    put<std::uint8_t>(out, gt.built_by == BuiltBy::Fft ? 1 : 0);
    for (const auto& z : gt.G) {
        encode_real(out, z.re);
        encode_real(out, z.im);
    }
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream(path, std::ios::binary) << out;
}

template <class Real>
std::optional<GaussTable<Real>> load_gauss_table(const FieldView& v, const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::string in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const std::uint64_t N = v.order();
    std::string h = header(v, mantissa_bits<Real>(), N);
    if (in.compare(0, h.size(), h) != 0) return std::nullopt;
    std::size_t pos = h.size();
    std::uint8_t bb;
    if (!get(in, pos, bb)) return std::nullopt;
    GaussTable<Real> gt;
    gt.p = v.p();
    gt.e = v.e();
    gt.q = v.q();
    gt.bits = mantissa_bits<Real>();
    gt.built_by = bb ? BuiltBy::Fft : BuiltBy::Naive;
    gt.G.resize(N);
    for (auto& z : gt.G)
        if (!decode_real(in, pos, z.re) || !decode_real(in, pos, z.im)) return std::nullopt;
    if (pos != in.size()) return std::nullopt;
    return gt;
}

template <class Real>
GaussTable<Real> gauss_table_cached(const FieldView& v, std::uint64_t fft_threshold, const std::string& cache_dir) {
    std::string path;
    if (!cache_dir.empty()) {
        path = cache_dir + "/gauss_" + gauss_cache_key(v, mantissa_bits<Real>()) + ".bin";
        if (auto gt = load_gauss_table<Real>(v, path)) {
            validate_gauss_table(*gt);
            return *gt;
        }
    }
    CharTable<Real> ct(v);
    auto gt = build_gauss_table(ct, fft_threshold);
    if (!path.empty()) save_gauss_table(gt, v, path);
    return gt;
}

#define DWORK_INSTANTIATE(R)                                                                           \
    template void save_gauss_table<R>(const GaussTable<R>&, const FieldView&, const std::string&);     \
    template std::optional<GaussTable<R>> load_gauss_table<R>(const FieldView&, const std::string&);   \
    template GaussTable<R> gauss_table_cached<R>(const FieldView&, std::uint64_t, const std::string&);
DWORK_INSTANTIATE(Real64)
DWORK_INSTANTIATE(Real128)
DWORK_INSTANTIATE(Real256)
#undef DWORK_INSTANTIATE

}  // namespace dwork
