#pragma once

#include <gmpxx.h>

#include <string>

namespace bfc {

using Q = mpq_class;
using Z = mpz_class;

// "p/q" with q > 0 and gcd 1; integers print without "/1".
std::string to_string(const Q& x);

// num/den in lowest terms. Throws std::domain_error if den == 0.
Q frac(long num, long den);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Q parse_rational(const std::string& text);

// 1/s! with the convention that it vanishes for s < 0.
Q inv_factorial(long s);

Z factorial(long s);

}  // namespace bfc
