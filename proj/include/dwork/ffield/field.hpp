#pragma once
// Finite fields F_{p^m} with dense exp/log tables.
//
// Elements are stored as integer codes c_0 + c_1 p + ... + c_{m-1} p^{m-1}
// where sum c_i X^i is the reduced representative modulo the defining
// polynomial. The generator is always the class of X for m > 1 (the search
// keeps drawing moduli until X is primitive).

#include <cstdint>
#include <string>
#include <vector>

namespace dwork {

struct FFElem {
    std::uint32_t code = 0;
    friend bool operator==(FFElem a, FFElem b) { return a.code == b.code; }
    friend bool operator!=(FFElem a, FFElem b) { return a.code != b.code; }
};

class FieldCtx {
public:
    int p = 0;
    int m = 0;
    std::uint64_t q = 0;
    std::uint64_t seed = 0;
    std::vector<int> modulus;  // m+1 coefficients, lowest first, monic
    FFElem g;

    bool has_table() const { return !log_.empty(); }

    FFElem zero() const { return {0}; }
    FFElem one() const { return {1}; }
    FFElem from_int(long long v) const;  // image of an integer in the prime field
    FFElem from_coeffs(const std::vector<int>& c) const;
    std::vector<int> coeffs(FFElem x) const;

    FFElem add(FFElem a, FFElem b) const;
    FFElem sub(FFElem a, FFElem b) const;
    FFElem neg(FFElem a) const;
    FFElem mul(FFElem a, FFElem b) const;
    FFElem inv(FFElem a) const;
    FFElem pow(FFElem a, std::uint64_t e) const;

    FFElem exp(std::uint64_t i) const { return {exp_[i % (q - 1)]}; }
    std::uint32_t dlog(FFElem x) const;  // throws ZeroElement / NoTable
    int trace(FFElem x) const;           // Tr to F_p, as an integer in [0, p)
    int trace_by_definition(FFElem x) const;

    std::string describe() const;  // "F_{p^m} mod [...] g=[...]"

    // raw tables, read-only
    const std::vector<std::uint32_t>& exp_table() const { return exp_; }
    const std::vector<std::int32_t>& log_table() const { return log_; }

private:
    friend FieldCtx build_field(int, int, std::uint64_t, std::uint64_t, const std::string&);
    std::vector<std::uint32_t> pw_;    // p^i
    std::vector<std::uint32_t> exp_;   // g^i, i < q-1
    std::vector<std::int32_t> log_;    // code -> i, -1 at 0
    std::vector<int> trace_basis_;     // Tr(X^j)
};

FieldCtx build_field(int p, int m, std::uint64_t seed = 0, std::uint64_t cap = std::uint64_t(1) << 24,
                     const std::string& cache_dir = "");

// Trace to the prime field.
int trace_to_prime(const FieldCtx& ctx, FFElem x);
std::uint32_t dlog(const FieldCtx& ctx, FFElem x);

// The subfield F_{p^e} inside ctx, realised as the cyclic subgroup generated
// by g^{(q-1)/(p^e-1)} together with 0.
class FieldView {
public:
    FieldView(const FieldCtx& ctx, int e);

    const FieldCtx& ctx() const { return *ctx_; }
    int p() const { return ctx_->p; }
    int e() const { return e_; }
    std::uint64_t q() const { return qe_; }
    std::uint64_t order() const { return qe_ - 1; }
    std::uint64_t step() const { return step_; }
    FFElem embed_gen() const { return ctx_->exp(step_); }

    FFElem elem(std::uint64_t i) const { return ctx_->exp(step_ * (i % (qe_ - 1))); }
    std::vector<FFElem> elements() const;  // 0, h^0, h^1, ...
    bool contains(FFElem x) const;
    std::uint64_t dlog(FFElem x) const;  // index with h^i = x
    int trace(FFElem x) const;           // Tr_{F_{p^e}/F_p}
    int quadratic_char(FFElem x) const;  // 0, 1 or -1; p odd

private:
    const FieldCtx* ctx_;
    int e_;
    std::uint64_t qe_;
    std::uint64_t step_;
};

std::vector<FFElem> subfield_elements(const FieldCtx& ctx, int e);

// Prime factors of n by trial division (throws FactoringTooHard past the bound).
std::vector<std::uint64_t> prime_factors(std::uint64_t n, std::uint64_t bound = 1u << 22);
bool is_prime(std::uint64_t n);
// q = p^m, or throws InvalidArgument.
std::pair<int, int> prime_power(std::uint64_t q);
std::uint64_t upow(std::uint64_t b, unsigned e);

}  // namespace dwork
