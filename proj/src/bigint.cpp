#include "chenlie/bigint.hpp"

#include <stdexcept>

#include "chenlie/errors.hpp"

namespace chenlie {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

Int binomial_any(long a, long k) {
  if (k < 0) return 0;
  Int c = 1;
  for (long i = 1; i <= k; ++i) {
    c *= (a - i + 1);
    c /= i;  // exact: c is C(a, i) * i! / i! at each step
  }
  return c;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(Int v) {
  if (v < 0) v = -v;
  std::vector<std::int64_t> out;
  if (v <= 1) return out;
  for (std::int64_t d = 2; Int(d) * d <= v && d < 2'000'000; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) {
    // no factor below 2e6, so a remaining cofactor under (2e6)^2 is prime
    if (v < Int(2'000'000) * 2'000'000) {
      out.push_back(static_cast<std::int64_t>(v));
    } else {
      throw SizeLimitError("prime_factors: cofactor too large to factor: " +
                           v.str());
    }
  }
  return out;
}

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int r = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

}  // namespace chenlie
