#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chenlie/bigint.hpp"
#include "chenlie/holonomy.hpp"
#include "chenlie/matrix.hpp"
#include "chenlie/words.hpp"

namespace chenlie {

// All monomials of total degree q in n variables, lex order on exponent
// vectors, with index lookup and multiply-by-variable maps into the
// degree-(q+1) table.
struct MonomialTable {
  int n = 0;
  int q = 0;
  std::vector<std::vector<int>> exps;

  static MonomialTable build(int n, int q);
  long count() const { return static_cast<long>(exps.size()); }
  std::string label(long idx) const;
};

// idx of mono * s_var (0-based var) inside the degree-(q+1) table.
std::vector<std::vector<long>> multiply_maps(const MonomialTable& from,
                                             const MonomialTable& to);

// Caps on constructed blocks; exceeding them raises SizeLimitError rather
// than truncating.
struct BlockLimits {
  long max_entries = 200000;  // stored (nonzero) entries
  long max_side = 2'000'000;  // rows or columns
};

/*
 * The degree-d component of the graded presentation
 *   S (x) (Wedge^3 + J)  ->  S (x) Wedge^2
 * of the metabelianization invariant of the quadratic Lie algebra:
 * rows are (monomial of degree d-2) x (pair i<j); columns are the Koszul
 * columns (monomial of degree d-3) x (triple i<j<k) followed by one column
 * per (monomial of degree d-2) x (relation).
 */
struct GradedBlock {
  int n = 0;
  int degree = 0;
  long koszul_cols = 0;
  long relation_cols = 0;
  SparseIntMatrix mat;
  MonomialTable row_monos;  // degree d-2
  MonomialTable col_monos;  // degree d-3 (empty when d < 3)

  std::string row_label(long r) const;
  std::string col_label(long c) const;
};

// Koszul columns only: d3(y_i^y_j^y_k) = y_i (x) y_j^y_k - y_j (x) y_i^y_k
// + y_k (x) y_i^y_j, one column per (monomial, triple). Empty when d < 3.
SparseIntMatrix koszul_d3_block(int n, int d,
                                const BlockLimits& limits = BlockLimits{});

// Relation columns only: column (monomial u, relation v) places the entries
// of v in rows (u, pair).
SparseIntMatrix relation_block(const QuadraticPresentation& q, int d,
                               const BlockLimits& limits = BlockLimits{});

GradedBlock graded_block(const QuadraticPresentation& q, int d,
                         const BlockLimits& limits = BlockLimits{});

/*
 * Per-degree report. rank_q and rank_fp are dimensions of the degree-d
 * piece of the presented module over Q and F_p; free_rank coincides with
 * rank_q (rows minus the rank of the presentation matrix over Q).
 * divisors holds the elementary divisors > 1 of the block, so the count of
 * divisors divisible by p equals rank_fp[p] - rank_q.
 */
struct DegreeReport {
  int degree = 0;
  long free_rank = 0;
  std::map<std::int64_t, long> rank_fp;
  std::vector<Int> divisors;

  long rank_q() const { return free_rank; }
};

DegreeReport degree_report(const QuadraticPresentation& q, int d,
                           const std::vector<std::int64_t>& primes,
                           bool with_torsion = true,
                           const BlockLimits& limits = BlockLimits{});

// Chen table: theta_1 = n and theta_k = free rank in degree k for k >= 2.
// These are the Chen ranks of a group with this holonomy presentation when
// the group is 1-formal; reports carry that caveat downstream.
struct ChenTable {
  int n = 0;
  int kmax = 0;
  std::vector<DegreeReport> reports;  // degrees 2..kmax
  std::vector<long> theta;            // theta[k-1], k = 1..kmax
};

ChenTable chen_table(const QuadraticPresentation& q, int kmax,
                     const std::vector<std::int64_t>& primes,
                     bool with_torsion = true,
                     const BlockLimits& limits = BlockLimits{});

// Dimension over the field of the degree-d piece of the linearized
// Alexander invariant of a commutator-relators presentation, computed from
// the linearized Alexander matrix as dim A_d - dim S_d.
long linearized_B_dims(const GroupPresentation& p, int d, const Field& f);

// Primes p with rank_fp != rank_q in some degree <= kmax: exactly the
// primes dividing an elementary divisor on that range.
std::set<std::int64_t> torsion_primes(const QuadraticPresentation& q, int kmax,
                                      const BlockLimits& limits = BlockLimits{});

}  // namespace chenlie
