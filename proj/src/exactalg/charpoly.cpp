#include "dwork/exactalg/charpoly.hpp"

#include "dwork/error.hpp"
#include "dwork/exactalg/series.hpp"

namespace dwork {

Poly power_sums_to_charpoly(const std::vector<BigRat>& p, int rank, const std::optional<BigRat>& det_value) {
    const int r = static_cast<int>(p.size());
    if (rank < 0) throw InvalidArgument("negative rank");
    if (r < rank && !(r == rank - 1 && det_value))
        throw InvalidArgument("power_sums_to_charpoly: need rank power sums, or rank-1 and a determinant");
    const int top = std::max(r, rank);
    std::vector<BigRat> e(top + 1, BigRat(0));
    e[0] = 1;
    for (int k = 1; k <= std::min(r, top); ++k) {
        BigRat acc = 0;
        for (int i = 1; i <= k; ++i) {
            BigRat t = e[k - i] * p[i - 1];
            if (i % 2) acc += t;
            else acc -= t;
        }
        e[k] = acc / k;
    }
    if (r == rank - 1) {
        e[rank] = *det_value;
    } else if (det_value && rank > 0 && e[rank] != *det_value) {
        throw InconsistentDet("top elementary symmetric " + e[rank].get_str() + " != supplied " + det_value->get_str());
    }
    for (int k = rank + 1; k <= r; ++k)
        if (sgn(e[k]) != 0) throw Mismatch("power sums beyond rank are inconsistent with rank " + std::to_string(rank));
    std::vector<BigRat> c(rank + 1);
    for (int k = 0; k <= rank; ++k) c[k] = (k % 2) ? BigRat(-e[k]) : e[k];
    return Poly(std::move(c));
}

std::vector<BigRat> charpoly_power_sums(const Poly& cp, int D) {
    if (cp.is_zero() || cp[0] != 1) throw InvalidArgument("charpoly must have constant term 1");
    std::vector<BigRat> p(D + 1, BigRat(0));
    for (int d = 1; d <= D; ++d) {
        BigRat acc = -cp.coeff(d) * d;
        for (int i = 1; i < d && i <= cp.degree(); ++i) acc -= cp[i] * p[d - i];
        p[d] = acc;
    }
    p.erase(p.begin());
    return p;
}

BigRat charpoly_power_sum(const Poly& cp, int d) {
    if (d < 1) throw InvalidArgument("power sum index must be >= 1");
    return charpoly_power_sums(cp, d).back();
}

std::vector<BigRat> elementary_from_charpoly(const Poly& cp, int D) {
    std::vector<BigRat> e(D + 1, BigRat(0));
    for (int k = 0; k <= std::min(D, cp.degree()); ++k) e[k] = (k % 2) ? BigRat(-cp[k]) : cp[k];
    return e;
}

std::vector<BigRat> complete_from_charpoly(const Poly& cp, int D) {
    // sum h_k T^k = 1 / cp(T)
    ZetaSeries h = series_inv(series_from_poly(cp, D));
    return h.coeffs;
}

Poly charpoly_adams(const Poly& cp, int r) {
    const int rank = cp.degree();
    if (rank <= 0) return Poly::one();
    auto p = charpoly_power_sums(cp, rank * r);
    std::vector<BigRat> pr(rank);
    for (int k = 1; k <= rank; ++k) pr[k - 1] = p[k * r - 1];
    return power_sums_to_charpoly(pr, rank);
}

}  // namespace dwork
