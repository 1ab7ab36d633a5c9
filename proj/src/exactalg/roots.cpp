#include "dwork/exactalg/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "dwork/error.hpp"
#include "dwork/exactalg/hp.hpp"

namespace dwork {

namespace {

template <class Real>
std::vector<RootEstimate> polish(const Poly& p, const std::vector<std::complex<long double>>& seeds) {
    using C = Complex<Real>;
    using std::pow;
    using std::abs;
    const int n = p.degree();
    std::vector<Real> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = real_from<Real>(p[i]);
    const Real eps = pow(Real(2), -mantissa_bits<Real>());
    auto eval = [&](const C& z, C& v, C& dv, Real& absbound) {
        v = C(a[n]);
        dv = C(Real(0));
        Real az = abs(z);
        absbound = abs(a[n]);
        for (int i = n - 1; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + C(a[i]);
            absbound = absbound * az + abs(a[i]);
        }
    };
    std::vector<RootEstimate> out;
    for (const auto& s : seeds) {
        C z(Real(s.real()), Real(s.imag()));
        C v, dv;
        Real ab;
        for (int it = 0; it < 200; ++it) {
            eval(z, v, dv, ab);
            if (norm(dv) == 0) break;
            C step = v / dv;
            z -= step;
            if (abs(step) <= eps * 16 * abs(z)) break;
        }
        eval(z, v, dv, ab);
        Real resid = abs(v) + eps * 4 * Real(n + 1) * ab;
        Real b2 = pow(resid / abs(a[n]), Real(1) / Real(n));
        Real bound = b2;
        if (norm(dv) != 0) bound = std::min(bound, Real(n) * resid / abs(dv));
        RootEstimate r;
        r.re = to_ld(z.re);
        r.im = to_ld(z.im);
        r.magnitude = to_ld(abs(z));
        r.error_bound = to_ld(bound);
        if (!std::isfinite(r.magnitude) || !std::isfinite(r.error_bound))
            throw NonConvergence("root polishing produced a non-finite value");
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<RootEstimate> root_magnitudes(const Poly& p, int bits) {
    const int n = p.degree();
    if (n < 1) throw InvalidArgument("root_magnitudes needs degree >= 1");
    // scale T = s U so that the roots in U are near the unit circle
    long double s = std::pow(std::fabs(to_ld(real_from<Real128>(p[0] / p[n]))), 1.0L / n);
    if (!(s > 0) || !std::isfinite(s)) s = 1;
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Mat comp = Mat::Zero(n, n);
    long double lead = to_ld(real_from<Real128>(p[n])) * std::pow(s, n);
    for (int i = 0; i < n; ++i) {
        long double ai = to_ld(real_from<Real128>(p[i])) * std::pow(s, i);
        comp(i, n - 1) = -ai / lead;
        if (i > 0) comp(i, i - 1) = 1;
    }
    Eigen::EigenSolver<Mat> es(comp, false);
    if (es.info() != Eigen::Success) throw NonConvergence("companion eigenvalue iteration failed");
    std::vector<std::complex<long double>> seeds;
    for (int i = 0; i < n; ++i) seeds.push_back(es.eigenvalues()[i] * s);
    return with_precision(bits, [&]<class Real>() { return polish<Real>(p, seeds); });
}

std::vector<long double> reciprocal_root_magnitudes(const Poly& cp, int bits) {
    std::vector<long double> out;
    if (cp.degree() < 1) return out;
    for (const auto& r : root_magnitudes(cp, bits)) out.push_back(1.0L / r.magnitude);
    std::sort(out.begin(), out.end());
    return out;
}

long double max_relative_deviation(const Poly& cp, long double target, int bits) {
    long double worst = 0;
    for (long double m : reciprocal_root_magnitudes(cp, bits)) worst = std::max(worst, std::fabs(m - target) / target);
    return worst;
}

int functional_equation_check(const Poly& p, int weight, const BigInt& q) {
    if (p.is_zero() || p[0] != 1) throw InvalidArgument("functional_equation_check needs p(0) = 1");
    const int r = p.degree();
    const int sign = sgn(p[r]) > 0 ? 1 : -1;
    // c_{r-i} = e q^{w(r/2 - i)} c_i, compared after squaring
    for (int i = 0; i <= r; ++i) {
        const BigRat& lo = p[i];
        const BigRat& hi = p[r - i];
        BigRat rhs = rpow(BigRat(q), static_cast<long>(weight) * (r - 2 * i)) * lo * lo;
        if (hi * hi != rhs || sgn(hi) != sign * sgn(lo))
            throw NoFunctionalEquation("coefficient " + std::to_string(r - i) + " of " + to_string(p) +
                                       " breaks the weight-" + std::to_string(weight) + " symmetry");
    }
    return sign;
}

}  // namespace dwork
