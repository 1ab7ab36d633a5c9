#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace dwork {

using BigInt = mpz_class;
using BigRat = mpq_class;  // gmpxx keeps it canonical: gcd 1, positive denominator

BigInt ipow(const BigInt& base, unsigned long e);
BigRat rpow(const BigRat& base, long e);  // e may be negative
bool is_integer(const BigRat& x);
std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

// Binomial with C(x,y) = 0 for y < 0 or x < y.
BigInt binom(long x, long y);
long long binom_ll(long x, long y);

// Decimal-string lists for JSON output.
std::vector<std::string> to_strings(const std::vector<BigInt>& v);
std::vector<std::string> to_strings(const std::vector<BigRat>& v);

}  // namespace dwork
