#include "dwork/exactalg/polynomial.hpp"

#include "dwork/error.hpp"

namespace dwork {

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    std::vector<BigRat> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<BigRat> q(dq + 1);
    const BigRat& lead = b[db];
    for (int i = dq; i >= 0; --i) {
        BigRat f = r[i + db] / lead;
        q[i] = f;
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] -= f * b[j];
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    BigRat s = sgn(a[0]) != 0 ? a[0] : a[a.degree()];
    return a * BigRat(1 / s);
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

Poly poly_from_ints(const std::vector<long long>& v) {
    std::vector<BigRat> c;
    c.reserve(v.size());
    for (long long x : v) c.emplace_back(BigInt(std::to_string(x)));
    return Poly(std::move(c));
}

std::vector<std::string> coeff_strings(const Poly& p) { return to_strings(p.coeffs()); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        const BigRat& c = p[i];
        if (sgn(c) == 0) continue;
        BigRat a = abs(c);
        if (s.empty()) s += sgn(c) < 0 ? "-" : "";
        else s += sgn(c) < 0 ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) s += a.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace dwork
