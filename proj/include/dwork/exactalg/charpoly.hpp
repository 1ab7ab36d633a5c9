#pragma once
// Newton identities between power sums and reversed characteristic
// polynomials cp(T) = prod (1 - alpha_i T).

#include <optional>
#include <vector>

#include "dwork/exactalg/polynomial.hpp"

namespace dwork {

Poly power_sums_to_charpoly(const std::vector<BigRat>& p, int rank, const std::optional<BigRat>& det_value = std::nullopt);
BigRat charpoly_power_sum(const Poly& cp, int d);
std::vector<BigRat> charpoly_power_sums(const Poly& cp, int D);  // p_1..p_D

// Elementary symmetric e_0..e_D and complete homogeneous h_0..h_D of the
// reciprocal roots of cp (e_k = 0 beyond deg cp).
std::vector<BigRat> elementary_from_charpoly(const Poly& cp, int D);
std::vector<BigRat> complete_from_charpoly(const Poly& cp, int D);

// Reversed charpoly of the alpha_i^r.
Poly charpoly_adams(const Poly& cp, int r);

}  // namespace dwork
