#pragma once
// Orbits of r -> {p r} on S_m = {1/m, ..., (m-1)/m}.

#include <vector>

namespace dwork {

struct Orbit {
    int rep = 0;               // representative numerator j (r = j/m), smallest in the orbit
    int length = 0;            // d: least d with (p^d - 1) r integral
    std::vector<int> members;  // numerators in orbit order j, pj, p^2 j, ...
};

struct OrbitSet {
    int m = 1;
    int p = 2;
    std::vector<Orbit> orbits;  // sorted by (length, rep)
};

OrbitSet p_orbits(int m, int p);

}  // namespace dwork
