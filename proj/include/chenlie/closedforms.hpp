#pragma once

#include <string>
#include <vector>

#include "chenlie/bigint.hpp"

namespace chenlie {

// Truncated integer series c_1..c_kmax with the formula it came from.
struct SeriesTable {
  std::string label;
  std::vector<Int> c;  // c[k-1] is the degree-k coefficient

  const Int& at(int k) const { return c.at(k - 1); }
};

// Chen rank of the free group F_n in degree k:
// n for k = 1, (k-1) C(n+k-2, k) for k >= 2.
Int free_chen_rank(long n, long k);

// Coefficients of 1 + nt - (1 - nt + t^2)/(1-t)^n, constant term dropped.
SeriesTable one_relator_series(int n, int kmax);

// Chen ranks of the pure braid group P_n: theta_1 = C(n,2),
// theta_2 = C(n+1,4) - C(n,4), theta_k = (k-1) C(n+1,4) for k >= 3.
SeriesTable pure_braid_series(int n, int kmax);

// The unique integers phi_k with prod_k (1-t^k)^{phi_k} = P(t) mod
// t^{kmax+1}, found degree by degree. Requires P(0) = 1; rejects inputs
// where the sequential division leaves a nonunit residue.
SeriesTable invert_lcs_product(const std::vector<Int>& poly, int kmax);

// The characteristic polynomial 1 - 2g t + t^2 of a genus-g surface's
// lower central series product formula.
std::vector<Int> surface_lcs_poly(int g);

}  // namespace chenlie
