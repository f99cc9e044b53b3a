#include "chenlie/gradedalg.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "chenlie/closedforms.hpp"
#include "chenlie/errors.hpp"
#include "chenlie/liecore.hpp"
#include "chenlie/words.hpp"

using namespace chenlie;

namespace {

QuadraticPresentation quad(int n, std::vector<std::vector<Int>> rels) {
  QuadraticPresentation q;
  q.n = n;
  q.relations = std::move(rels);
  q.validate();
  return q;
}

QuadraticPresentation random_quad(std::mt19937_64& rng, int max_n, int max_m,
                                  int span) {
  const int n = 2 + static_cast<int>(rng() % (max_n - 1));
  const WedgePairs wp{n};
  QuadraticPresentation q;
  q.n = n;
  const int m = static_cast<int>(rng() % (max_m + 1));
  for (int k = 0; k < m; ++k) {
    std::vector<Int> v(wp.dim(), Int(0));
    for (auto& x : v)
      if (rng() % 2) x = static_cast<long>(rng() % (2 * span + 1)) - span;
    q.relations.push_back(std::move(v));
  }
  return q;
}

}  // namespace

TEST_CASE("monomial tables") {
  const MonomialTable t = MonomialTable::build(3, 2);
  CHECK(t.count() == 6);
  CHECK(MonomialTable::build(3, 0).count() == 1);
  CHECK(MonomialTable::build(3, -1).count() == 0);
  CHECK(MonomialTable::build(4, 5).count() == binomial(8, 5));
  const auto mul = multiply_maps(MonomialTable::build(2, 1),
                                 MonomialTable::build(2, 2));
  CHECK(mul.size() == 2);
}

TEST_CASE("koszul block shapes and entries") {
  SUBCASE("n=3, d=3: one column, three unit entries") {
    const SparseIntMatrix m = koszul_d3_block(3, 3);
    CHECK(m.rows() == 9);  // three degree-1 monomials times three pairs
    CHECK(m.cols() == 1);
    // rows are (monomial s_i) x (pair): entries +1 at s1 x (y2^y3),
    // -1 at s2 x (y1^y3), +1 at s3 x (y1^y2); pairs in lex order
    const WedgePairs wp{3};
    std::vector<Int> col(9, Int(0));
    for (long r = 0; r < m.rows(); ++r)
      for (auto& e : m.row(r)) col[r] = e.second;
    CHECK(col[0 * 3 + wp.index(2, 3)] == 1);
    CHECK(col[1 * 3 + wp.index(1, 3)] == -1);
    CHECK(col[2 * 3 + wp.index(1, 2)] == 1);
  }
  SUBCASE("n=2 has no triples") {
    for (int d = 3; d <= 6; ++d) CHECK(koszul_d3_block(2, d).cols() == 0);
  }
  SUBCASE("n=3, d=4 has one column per degree-1 monomial") {
    CHECK(koszul_d3_block(3, 4).cols() == 3);
  }
  SUBCASE("d=2 is empty") { CHECK(koszul_d3_block(4, 2).cols() == 0); }
}

TEST_CASE("relation block") {
  SUBCASE("single scaled relation at d=2") {
    const SparseIntMatrix m = relation_block(quad(2, {{Int(7)}}), 2);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(m.row(0) == SparseRow{{0, Int(7)}});
  }
  SUBCASE("no relations, no columns") {
    CHECK(relation_block(quad(3, {}), 4).cols() == 0);
  }
  SUBCASE("block dimensions match the counting formulas") {
    const QuadraticPresentation q = quad(4, {std::vector<Int>(6, Int(1)),
                                             std::vector<Int>(6, Int(0))});
    for (int d = 2; d <= 6; ++d) {
      const GradedBlock b = graded_block(q, d);
      CHECK(b.mat.rows() ==
            binomial(4 + d - 3, d - 2) * binomial(4, 2));
      CHECK(b.mat.cols() == binomial(4 + d - 4, d - 3) * binomial(4, 3) +
                                binomial(4 + d - 3, d - 2) * 2);
    }
  }
}

TEST_CASE("block labels") {
  const GradedBlock b = graded_block(quad(3, {{Int(1), Int(0), Int(2)}}), 3);
  CHECK(b.row_label(0) == "s1 (x) y1^y2");
  CHECK(b.col_label(0) == "1 (x) y1^y2^y3");
  CHECK(b.col_label(b.koszul_cols) == "s1 (x) r1");
}

TEST_CASE("degree reports: frozen examples") {
  SUBCASE("free n=2 at degree 4") {
    const DegreeReport r = degree_report(quad(2, {}), 4, {2, 3});
    CHECK(r.free_rank == 3);
    CHECK(r.divisors.empty());
    CHECK(r.rank_fp.at(2) == 3);
  }
  SUBCASE("relation 2*(y1^y2) at degree 3") {
    const DegreeReport r = degree_report(quad(2, {{Int(2)}}), 3, {2});
    CHECK(r.free_rank == 0);
    CHECK(r.divisors == std::vector<Int>{2, 2});
    CHECK(r.rank_fp.at(2) == 2);
  }
  SUBCASE("two-component link with weight 6 at degree 4") {
    const DegreeReport r = degree_report(quad(2, {{Int(6)}}), 4, {2, 3, 5});
    CHECK(r.free_rank == 0);
    CHECK(r.divisors == std::vector<Int>{6, 6, 6});
    CHECK(r.rank_fp.at(2) == 3);
    CHECK(r.rank_fp.at(3) == 3);
    CHECK(r.rank_fp.at(5) == 0);
  }
}

TEST_CASE("chen tables") {
  SUBCASE("free groups match the closed form") {
    for (int n = 2; n <= 3; ++n) {
      const ChenTable t = chen_table(quad(n, {}), 6, {2, 3});
      CHECK(t.theta[0] == n);
      for (int k = 2; k <= 6; ++k)
        CHECK(Int(t.theta[k - 1]) == free_chen_rank(n, k));
    }
  }
  SUBCASE("free n=3 through degree 4") {
    const ChenTable t = chen_table(quad(3, {}), 4, {});
    CHECK(t.theta == std::vector<long>{3, 3, 8, 15});
  }
  SUBCASE("genus-2 relation matches the one-relator series") {
    GroupPresentation p{4, {parse_word("[x1,x2] [x3,x4]", 4)}};
    const ChenTable t = chen_table(from_group(p), 5, {2, 3});
    const SeriesTable s = one_relator_series(4, 5);
    for (int k = 1; k <= 5; ++k) CHECK(Int(t.theta[k - 1]) == s.at(k));
    for (auto& r : t.reports) CHECK(r.divisors.empty());
  }
  SUBCASE("braid arrangement table over Q") {
    const QuadraticPresentation q = from_arrangement(
        MatroidLines{6,
                     {{1, 2, 4}, {1, 3, 5}, {1, 6}, {2, 3, 6},
                      {2, 5}, {3, 4}, {4, 5, 6}}});
    const ChenTable t = chen_table(q, 5, {}, /*with_torsion=*/false);
    CHECK(t.theta == std::vector<long>{6, 4, 10, 15, 20});
  }
}

TEST_CASE("graded blocks agree with the Lyndon-basis oracle") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 40; ++trial) {
    const QuadraticPresentation q = random_quad(rng, 4, 3, 2);
    for (int d = 2; d <= 5; ++d) {
      const DegreeReport rep = degree_report(q, d, {});
      const auto [orank, odivs] = oracle_infinitesimal_alexander(q, d);
      CAPTURE(trial);
      CAPTURE(q.n);
      CAPTURE(d);
      CHECK(rep.free_rank == orank);
      CHECK(rep.divisors == odivs);
    }
  }
}

TEST_CASE("linearized Alexander dimensions") {
  SUBCASE("triple commutator: free holonomy, metabelian dimensions") {
    GroupPresentation p{2, {parse_word("[[x1,x2],x2]", 2)}};
    CHECK(linearized_B_dims(p, 3, Field::rationals()) == 2);
    CHECK(linearized_B_dims(p, 4, Field::rationals()) == 3);
  }
  SUBCASE("powered commutator: characteristic dependence") {
    GroupPresentation p{2, {parse_word("[x1,x2^3]", 2)}};
    CHECK(linearized_B_dims(p, 4, Field::mod(3)) == 3);
    for (int d = 2; d <= 5; ++d)
      CHECK(linearized_B_dims(p, d, Field::rationals()) == 0);
    CHECK(linearized_B_dims(p, 4, Field::mod(2)) == 0);
  }
}

TEST_CASE("linearized module agrees with the graded presentation") {
  // same dimensions from the Fox-matrix route and the holonomy route,
  // over Q and small prime fields
  std::mt19937_64 rng(424243);
  auto random_relator = [&](int n) {
    Word r;
    const int pieces = 1 + rng() % 3;
    for (int t = 0; t < pieces; ++t) {
      std::vector<int> a, b;
      for (int s = 0; s < 1 + static_cast<int>(rng() % 3); ++s) {
        int l = 1 + static_cast<int>(rng() % n);
        a.push_back(rng() % 2 ? l : -l);
      }
      for (int s = 0; s < 1 + static_cast<int>(rng() % 3); ++s) {
        int l = 1 + static_cast<int>(rng() % n);
        b.push_back(rng() % 2 ? l : -l);
      }
      r = r * commutator(Word(a), Word(b));
    }
    return r;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    GroupPresentation p{n, {}};
    const int m = 1 + rng() % 2;
    for (int k = 0; k < m; ++k) p.relators.push_back(random_relator(n));
    const QuadraticPresentation q = from_group(p);
    for (int d = 2; d <= 4; ++d) {
      const GradedBlock b = graded_block(q, d);
      for (const Field& f :
           {Field::rationals(), Field::mod(2), Field::mod(3)}) {
        const long module_dim =
            b.mat.rows() - (f.kind == FieldKind::rationals
                                ? b.mat.rank_over_q()
                                : b.mat.rank_mod_p(f.p));
        CAPTURE(trial);
        CAPTURE(d);
        CHECK(linearized_B_dims(p, d, f) == module_dim);
      }
    }
  }
}

TEST_CASE("torsion primes") {
  SUBCASE("free presentations have none") {
    CHECK(torsion_primes(quad(3, {}), 5).empty());
  }
  SUBCASE("weight 6 contributes 2 and 3") {
    CHECK(torsion_primes(quad(2, {{Int(6)}}), 4) ==
          std::set<std::int64_t>{2, 3});
  }
  SUBCASE("unit triangle link is torsion-free") {
    const QuadraticPresentation q = from_link({{Int(0), Int(1), Int(1)},
                                               {Int(1), Int(0), Int(1)},
                                               {Int(1), Int(1), Int(0)}});
    CHECK(torsion_primes(q, 5).empty());
  }
}

TEST_CASE("block caps raise explicit errors") {
  BlockLimits tight;
  tight.max_entries = 10;
  CHECK_THROWS_AS(degree_report(quad(4, {}), 6, {}, true, tight),
                  SizeLimitError);
}
