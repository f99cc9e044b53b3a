#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "chenlie/bigint.hpp"
#include "chenlie/words.hpp"

namespace chenlie {

// Index bookkeeping for the basis { y_i ^ y_j : 1 <= i < j <= n } of the
// wedge square, ordered lexicographically.
struct WedgePairs {
  int n = 0;
  long dim() const { return static_cast<long>(n) * (n - 1) / 2; }
  long index(int i, int j) const;          // 1-based, i < j
  std::pair<int, int> unrank(long k) const;
};

/*
 * Quadratic presentation data: n degree-one generators and a list of
 * integer relation vectors in the wedge-square basis. Relations are kept
 * exactly as constructed -- possibly Z-linearly dependent, never reduced --
 * because torsion computations need the integral lattice they span, not a
 * field basis.
 */
struct QuadraticPresentation {
  int n = 0;
  std::vector<std::vector<Int>> relations;  // each of length C(n,2)

  void validate() const;
};

// Weighted graph on link components; edges are stored only for nonzero
// weights, keys (i, j) with i < j, 1-based.
struct LinkingGraph {
  int n = 0;
  std::map<std::pair<int, int>, Int> edges;

  static LinkingGraph from_matrix(const std::vector<std::vector<Int>>& l);
};

// Rank-2 flats of the matroid of an arrangement: every pair of points lies
// in exactly one line.
struct MatroidLines {
  int n = 0;
  std::vector<std::vector<int>> lines;  // sorted members, 1-based

  void validate() const;
};

enum class FieldKind { rationals, prime };

struct Field {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;
  static Field rationals() { return {FieldKind::rationals, 0}; }
  static Field mod(std::int64_t p);
};

// Relation vectors rbar_k = sum_{i<j} eps(i,j)(r_k) y_i ^ y_j of a
// commutator-relators presentation.
QuadraticPresentation from_group(const GroupPresentation& p);

// For a symmetric integer matrix with zero diagonal: n-1 relations,
// relation i being [y_i, sum_j l_ij y_j] for i = 1..n-1.
QuadraticPresentation from_link(const std::vector<std::vector<Int>>& l);

// Computes the rank-2 flats of a central arrangement from its normals by
// exact rank checks. Rejects zero or proportional normals.
MatroidLines rank2_flats(const std::vector<std::vector<Int>>& normals);

// One relation per pair (line d, j in d): the vector of [y_j, sum_{i in d} y_i].
// The relations of one line sum to zero; the dependency is kept.
QuadraticPresentation from_arrangement(const MatroidLines& lines);

// Rank of the span of the relation vectors over Q or F_p.
long cup_rank(const QuadraticPresentation& q, const Field& f);

}  // namespace chenlie
