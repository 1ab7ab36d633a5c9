#pragma once
// Numeric root location for purity certificates, and the exact
// functional-equation test.

#include <vector>

#include "dwork/exactalg/polynomial.hpp"

namespace dwork {

struct RootEstimate {
    long double re = 0;
    long double im = 0;
    long double magnitude = 0;
    long double error_bound = 0;  // some exact root lies within this distance
};

// Companion-matrix eigenvalues (long double) polished by Newton steps at
// the requested precision.
std::vector<RootEstimate> root_magnitudes(const Poly& p, int bits = 128);

// Reciprocal-root magnitudes |alpha| of cp = prod (1 - alpha T), sorted.
std::vector<long double> reciprocal_root_magnitudes(const Poly& cp, int bits = 128);

// Largest relative deviation of the reciprocal roots of cp from target.
long double max_relative_deviation(const Poly& cp, long double target, int bits = 128);

// Sign e with p(T) = e T^r q^{wr/2} p(1/(q^w T)); throws NoFunctionalEquation.
int functional_equation_check(const Poly& p, int weight, const BigInt& q);

}  // namespace dwork
