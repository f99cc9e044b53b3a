#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chenlie/bigint.hpp"
#include "chenlie/holonomy.hpp"
#include "chenlie/matrix.hpp"

namespace chenlie {

// Number of Lyndon words of length d over n letters (Moebius sum
// (1/d) sum_{e|d} mu(e) n^{d/e}); the rank of the degree-d piece of the
// free Lie algebra on n generators.
long witt_rank(long n, long d);

// Noncommutative polynomial with words over letters 0..n-1 as monomials.
using LiePoly = std::map<std::string, Int>;

/*
 * Lyndon basis tables for the free Lie algebra on n generators, built once
 * per (n, degree cutoff) and shared. Immutable after construction.
 *
 * Degree-d basis elements are the Lyndon words of length d in lex order;
 * the bracketing of a word follows its standard factorization w = uv with
 * v the longest proper Lyndon suffix. Expansion of a bracketing in the free
 * associative algebra is triangular -- the word itself appears with
 * coefficient 1 and every other monomial is lex-greater -- which makes
 * rewriting a Lie element into the basis a straight peeling loop.
 */
class LyndonTable {
 public:
  static std::shared_ptr<const LyndonTable> get(int n, int maxdeg);

  int n() const { return n_; }
  int maxdeg() const { return maxdeg_; }

  const std::vector<std::string>& words(int d) const { return words_[d]; }
  long dim(int d) const { return static_cast<long>(words_[d].size()); }
  long word_index(int d, const std::string& w) const;
  const LiePoly& poly(int d, long idx) const { return polys_[d][idx]; }

  // Coordinates of [basis(d, idx), y_g] in the degree d+1 basis (g is
  // 0-based).
  const SparseRow& right_bracket(int d, long idx, int g) const {
    return rmul_[d][idx][g];
  }

  // Rewrites a homogeneous Lie element of degree d into basis coordinates.
  // Throws if the polynomial is not in the Lie subspace.
  SparseRow decompose(const LiePoly& p, int d) const;

  // Basis-coordinate vectors to polynomials and brackets of such vectors.
  LiePoly poly_of(int d, const SparseRow& v) const;
  SparseRow bracket(int da, const SparseRow& a, int db,
                    const SparseRow& b) const;

  // Row lattice of the degree-d piece of the derived subalgebra of the
  // free Lie algebra (brackets of basis elements of complementary degrees
  // >= 2), cached at construction.
  const HermiteBasis& derived_piece(int d) const { return derived_[d]; }

 private:
  LyndonTable(int n, int maxdeg);
  int n_, maxdeg_;
  std::vector<std::vector<std::string>> words_;
  std::vector<std::unordered_map<std::string, long>> index_;
  std::vector<std::vector<LiePoly>> polys_;
  std::vector<std::vector<std::vector<SparseRow>>> rmul_;
  std::vector<HermiteBasis> derived_;
};

// Expansion of the bracket of two Lyndon basis elements in the basis of
// degree da+db.
SparseRow bracket_expand(const LyndonTable& t, int da, long idx_a, int db,
                         long idx_b);

// Per-degree sublattices of the free Lie algebra, rows in Hermite form.
struct GradedSubspace {
  int n = 0;
  int kmax = 0;
  std::vector<HermiteBasis> piece;  // index d = 0..kmax (0, 1 unused)
};

// Degree pieces of the ideal generated by the relation vectors, embedded
// via y_i ^ y_j -> [y_i, y_j]: I_2 is the relation span and
// I_{d+1} = [I_d, degree-one part].
GradedSubspace ideal_degree_pieces(const QuadraticPresentation& q, int kmax,
                                   long dim_cap = 20000);

struct QuotientDegreeReport {
  int degree = 0;
  long rank = 0;                // free rank of the quotient in this degree
  std::vector<Int> divisors;    // elementary divisors > 1
};

// Report for H/H^(i) where H is the quotient of the free Lie algebra by
// the relation ideal; ChenTable-shaped.
struct DerivedQuotientReport {
  int n = 0;
  int i = 0;
  int kmax = 0;
  std::vector<QuotientDegreeReport> reports;  // degrees 1..kmax
  std::string note;  // set when 2^i > kmax forces the quotient to equal H
};

DerivedQuotientReport derived_quotient_ranks(const QuadraticPresentation& q,
                                             int i, int kmax,
                                             long dim_cap = 20000);

// Rank and elementary divisors of (H'/H'')_d = L_d / (L''_d + I_d) for
// d >= 2: the brute-force verifier for the graded presentation route.
std::pair<long, std::vector<Int>> oracle_infinitesimal_alexander(
    const QuadraticPresentation& q, int d, long dim_cap = 20000);

}  // namespace chenlie
