#include "chenlie/closedforms.hpp"

#include "chenlie/errors.hpp"

namespace chenlie {

Int free_chen_rank(long n, long k) {
  if (n < 1 || k < 1)
    throw InvalidInputError("free_chen_rank: need n >= 1 and k >= 1");
  if (k == 1) return n;
  return Int(k - 1) * binomial(n + k - 2, k);
}

SeriesTable one_relator_series(int n, int kmax) {
  if (n < 2) throw InvalidInputError("one_relator_series: need n >= 2");
  SeriesTable s;
  s.label = "one-relator";
  for (int k = 1; k <= kmax; ++k) {
    // coefficient of t^k in (1 - nt + t^2) * sum_j C(n+j-1, j) t^j
    Int inner = binomial(n + k - 1, k) - Int(n) * binomial(n + k - 2, k - 1) +
                binomial(n + k - 3, k - 2);
    Int c = (k == 1 ? Int(n) : Int(0)) - inner;
    s.c.push_back(std::move(c));
  }
  return s;
}

SeriesTable pure_braid_series(int n, int kmax) {
  if (n < 2) throw InvalidInputError("pure_braid_series: need n >= 2");
  SeriesTable s;
  s.label = "pure-braid";
  const Int a = binomial(n + 1, 4);
  for (int k = 1; k <= kmax; ++k) {
    if (k == 1)
      s.c.push_back(binomial(n, 2));
    else if (k == 2)
      s.c.push_back(a - binomial(n, 4));
    else
      s.c.push_back(Int(k - 1) * a);
  }
  return s;
}

namespace {

// series *= (1 - t^step)^e, truncated
void mul_binomial_power(std::vector<Int>& c, int step, const Int& e,
                        int kmax) {
  if (e == 0) return;
  // coefficients of (1 - t^step)^e: C(e, j) (-1)^j at degree step*j
  std::vector<Int> factor(kmax + 1, Int(0));
  factor[0] = 1;
  Int b = 1;
  for (long j = 1; static_cast<long>(step) * j <= kmax; ++j) {
    b *= e - (j - 1);
    b /= j;
    factor[step * j] = (j % 2 == 0) ? b : -b;
  }
  std::vector<Int> out(kmax + 1, Int(0));
  for (int i = 0; i <= kmax; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; i + j <= kmax; ++j)
      if (factor[j] != 0) out[i + j] += c[i] * factor[j];
  }
  c = std::move(out);
}

}  // namespace

SeriesTable invert_lcs_product(const std::vector<Int>& poly, int kmax) {
  if (poly.empty() || poly[0] != 1)
    throw InvalidInputError("invert_lcs_product: constant term must be 1");
  if (kmax < 1) throw InvalidInputError("invert_lcs_product: kmax must be >= 1");
  std::vector<Int> cur(kmax + 1, Int(0));
  for (std::size_t i = 0; i < poly.size() && i <= static_cast<std::size_t>(kmax);
       ++i)
    cur[i] = poly[i];
  SeriesTable s;
  s.label = "lcs-inversion";
  for (int k = 1; k <= kmax; ++k) {
    Int phi = -cur[k];
    mul_binomial_power(cur, k, -phi, kmax);
    s.c.push_back(std::move(phi));
  }
  for (int i = 1; i <= kmax; ++i)
    if (cur[i] != 0)
      throw InvalidInputError(
          "invert_lcs_product: residue after division is not 1; the input is "
          "not a lower-central-series product to this order");
  return s;
}

std::vector<Int> surface_lcs_poly(int g) {
  if (g < 1) throw InvalidInputError("surface_lcs_poly: genus must be >= 1");
  return {Int(1), Int(-2) * g, Int(1)};
}

}  // namespace chenlie
