#include "dwork/exactalg/bigrat.hpp"

#include "dwork/error.hpp"

namespace dwork {

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRat rpow(const BigRat& base, long e) {
    if (e >= 0) {
        BigRat r(ipow(base.get_num(), e), ipow(base.get_den(), e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw InvalidArgument("rpow: zero to a negative power");
    BigRat r(ipow(base.get_den(), -e), ipow(base.get_num(), -e));
    r.canonicalize();
    return r;
}

bool is_integer(const BigRat& x) { return x.get_den() == 1; }

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) { return x.get_str(); }

BigInt binom(long x, long y) {
    if (y < 0 || x < y) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(y));
    return r;
}

long long binom_ll(long x, long y) {
    BigInt r = binom(x, y);
    if (!r.fits_slong_p()) throw CapExceeded("binomial too large for 64 bits");
    return r.get_si();
}

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<std::string> to_strings(const std::vector<BigRat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace dwork
