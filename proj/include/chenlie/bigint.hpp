#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace chenlie {

// All ring arithmetic in this project is exact. Fox entries and elementary
// divisors of long relators overflow any fixed width, so the working integer
// type is arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(long n, long k);

// Generalized binomial C(a, k) for arbitrary integer a and k >= 0
// (a*(a-1)*...*(a-k+1)/k!), used by truncated power-series substitution.
Int binomial_any(long a, long k);

bool is_prime(std::int64_t p);

// Distinct prime factors of |v|, ascending. Throws SizeLimitError when a
// cofactor is too large to factor at desk scale.
std::vector<std::int64_t> prime_factors(Int v);

// Moebius function of n >= 1.
int mobius(long n);

}  // namespace chenlie
