#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chenlie/bigint.hpp"

namespace chenlie {

// One sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<long, Int>>;

/*
 * Sparse integer matrix with exact rank, modular rank, and Smith normal
 * form. Row-major storage; the graded blocks this project builds have O(1)
 * entries per column, so everything downstream assumes sparsity.
 *
 * rank_over_q       integer-preserving elimination: rows are combined as
 *                   (p/g)*target - (a/g)*pivot and divided by their content,
 *                   so no fractions ever appear. Runs on overflow-checked
 *                   64-bit words first and restarts with arbitrary precision
 *                   if a product overflows.
 * rank_mod_p        Gaussian elimination over F_p, machine arithmetic.
 * elementary_divisors
 *                   unimodular reduction in three stages: +-1 pivots in
 *                   singleton rows or columns are peeled off (fill-free, no
 *                   entry growth), the surviving rows are brought to a
 *                   Hermite basis of their row lattice, and the reduced core
 *                   is finished with the classical smallest-pivot algorithm.
 */
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(long rows, long cols) : rows_(rows), cols_(cols), row_(rows) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const;

  // Accumulates v into entry (r, c); rows may be built in any order.
  void add(long r, long c, Int v);
  const SparseRow& row(long r) const { return row_[r]; }
  void set_row(long r, SparseRow v) { row_[r] = std::move(v); }

  long rank_over_q() const;
  long rank_mod_p(std::int64_t p) const;

  // Nonzero diagonal of the Smith normal form, in divisibility order
  // (each entry divides the next); length equals the rank.
  std::vector<Int> elementary_divisors() const;

  SparseIntMatrix transposed() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<SparseRow> row_;
};

/*
 * Row basis of a sublattice of Z^dim, kept in Hermite form: one row per
 * pivot column, pivot entries positive, entries above a pivot reduced into
 * [0, pivot). Vectors are folded in one at a time with extended-gcd row
 * exchanges, so a basis can be grown incrementally across a graded
 * computation. No saturation is ever applied: the rows span the lattice
 * itself, not its rational closure.
 */
class HermiteBasis {
 public:
  explicit HermiteBasis(long dim) : dim_(dim) {}

  long dim() const { return dim_; }
  long rank() const { return static_cast<long>(rows_.size()); }

  // Folds v into the basis; returns true when the lattice grew.
  bool insert(SparseRow v);

  // Reduces entries above each pivot into [0, pivot). Idempotent.
  void normalize();

  // Rows in pivot-column order.
  std::vector<SparseRow> rows() const;

  SparseIntMatrix to_matrix() const;

  // Whether the lattice is its own saturation in Z^dim. Never set by this
  // class; callers that prove it may flag it for downstream consumers.
  bool saturated = false;

 private:
  long dim_;
  std::map<long, SparseRow> rows_;  // pivot column -> row
};

// Sum of scaled sparse rows: a*u + b*v.
SparseRow row_axpy(const Int& a, const SparseRow& u, const Int& b,
                   const SparseRow& v);

}  // namespace chenlie
