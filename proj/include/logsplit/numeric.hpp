#pragma once
#include <gmpxx.h>

#include <string>

namespace logsplit {

// Exact scalars. A Rat is always canonical: lowest terms, positive
// denominator, zero stored as 0/1. gmp arithmetic preserves canonical form,
// so only construction from a raw numerator/denominator pair needs care;
// always build through the helpers below.
using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional leading minus signs.
Rat rat_from_string(const std::string& s);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& q);

bool is_integer(const Rat& q);

// Throws std::overflow_error when v does not fit.
long to_long(const Int& v);

Int binomial2(const Int& n);  // n*(n-1)/2, zero for n < 2

}  // namespace logsplit
