#include "dwork/charsums/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "dwork/error.hpp"

namespace dwork {

OrbitSet p_orbits(int m, int p) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (std::gcd(m, p) != 1) throw NotCoprime("gcd(m, p) != 1");
    OrbitSet os{m, p, {}};
    std::vector<char> seen(m, 0);
    for (int j = 1; j < m; ++j) {
        if (seen[j]) continue;
        Orbit o;
        o.rep = j;
        int x = j;
        do {
            seen[x] = 1;
            o.members.push_back(x);
            x = static_cast<int>((static_cast<long long>(x) * p) % m);
        } while (x != j);
        // minimal d with (p^d - 1) j / m integral, computed on its own
        long long pd = 1;
        for (int d = 1;; ++d) {
            pd = (pd * p) % m;
            if (((pd - 1 + m) % m) * j % m == 0) {
                o.length = d;
                break;
            }
        }
        if (o.length != static_cast<int>(o.members.size())) throw Mismatch("orbit length disagrees with d(r)");
        os.orbits.push_back(std::move(o));
    }
    std::sort(os.orbits.begin(), os.orbits.end(),
              [](const Orbit& a, const Orbit& b) { return std::tie(a.length, a.rep) < std::tie(b.length, b.rep); });
    return os;
}

}  // namespace dwork
