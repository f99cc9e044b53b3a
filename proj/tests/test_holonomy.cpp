#include "chenlie/holonomy.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "chenlie/errors.hpp"
#include "chenlie/words.hpp"

using namespace chenlie;

namespace {

std::vector<std::vector<Int>> braid_a3_normals() {
  // hyperplanes z_i - z_j = 0 in C^4, pairs in lex order
  std::vector<std::vector<Int>> normals;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<Int> v(4, Int(0));
      v[i] = 1;
      v[j] = -1;
      normals.push_back(std::move(v));
    }
  return normals;
}

}  // namespace

TEST_CASE("wedge pair indexing round-trips") {
  const WedgePairs wp{5};
  long k = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      CHECK(wp.index(i, j) == k);
      CHECK(wp.unrank(k) == std::pair<int, int>{i, j});
      ++k;
    }
  CHECK(wp.dim() == k);
}

TEST_CASE("holonomy relations from a presentation") {
  SUBCASE("powered commutator") {
    GroupPresentation p{2, {parse_word("[x1,x2^5]", 2)}};
    const QuadraticPresentation q = from_group(p);
    CHECK(q.n == 2);
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relations[0] == std::vector<Int>{5});
  }
  SUBCASE("triple commutator gives the zero relation") {
    GroupPresentation p{2, {parse_word("[[x1,x2],x2]", 2)}};
    const QuadraticPresentation q = from_group(p);
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relations[0] == std::vector<Int>{0});
  }
  SUBCASE("genus-2 surface relation") {
    GroupPresentation p{4, {parse_word("[x1,x2] [x3,x4]", 4)}};
    const QuadraticPresentation q = from_group(p);
    const WedgePairs wp{4};
    std::vector<Int> expect(wp.dim(), Int(0));
    expect[wp.index(1, 2)] = 1;
    expect[wp.index(3, 4)] = 1;
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relations[0] == expect);
  }
}

TEST_CASE("surface relations are nondegenerate of full rank") {
  // genus-g relation sum [x_{2i-1}, x_{2i}] spans a rank-1 lattice whose
  // alternating form has rank 2g; here we just check the relation vector
  for (int g = 1; g <= 3; ++g) {
    const int n = 2 * g;
    std::string rel;
    for (int i = 1; i <= g; ++i)
      rel += "[x" + std::to_string(2 * i - 1) + ",x" + std::to_string(2 * i) +
             "] ";
    GroupPresentation p{n, {parse_word(rel, n)}};
    const QuadraticPresentation q = from_group(p);
    // the alternating matrix with these wedge coefficients is invertible
    const WedgePairs wp{n};
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        a[i - 1][j - 1] = q.relations[0][wp.index(i, j)];
        a[j - 1][i - 1] = -a[i - 1][j - 1];
      }
    long nonzero_rows = 0;
    for (auto& row : a) {
      bool nz = false;
      for (auto& x : row) nz = nz || x != 0;
      nonzero_rows += nz;
    }
    CHECK(nonzero_rows == n);
  }
}

TEST_CASE("link relations") {
  SUBCASE("two components") {
    const QuadraticPresentation q =
        from_link({{Int(0), Int(7)}, {Int(7), Int(0)}});
    REQUIRE(q.relations.size() == 1);
    CHECK(q.relations[0] == std::vector<Int>{7});
  }
  SUBCASE("triangle with unit weights") {
    const QuadraticPresentation q = from_link({{Int(0), Int(1), Int(1)},
                                               {Int(1), Int(0), Int(1)},
                                               {Int(1), Int(1), Int(0)}});
    REQUIRE(q.relations.size() == 2);
    CHECK(q.relations[0] == std::vector<Int>{1, 1, 0});
    CHECK(q.relations[1] == std::vector<Int>{-1, 0, 1});
  }
  SUBCASE("zero linking gives zero relations") {
    const QuadraticPresentation q = from_link(
        {{Int(0), Int(0), Int(0)},
         {Int(0), Int(0), Int(0)},
         {Int(0), Int(0), Int(0)}});
    REQUIRE(q.relations.size() == 2);
    for (auto& r : q.relations)
      CHECK(r == std::vector<Int>{0, 0, 0});
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(from_link({{Int(1), Int(2)}, {Int(2), Int(0)}}),
                    InvalidInputError);
    CHECK_THROWS_AS(from_link({{Int(0), Int(2)}, {Int(3), Int(0)}}),
                    InvalidInputError);
  }
}

TEST_CASE("rank-2 flats") {
  SUBCASE("braid arrangement in C^4") {
    const MatroidLines lines = rank2_flats(braid_a3_normals());
    CHECK(lines.n == 6);
    // hyperplane order: 12,13,14,23,24,34 -> indices 1..6
    std::vector<std::vector<int>> expect = {
        {1, 2, 4},  // 12,13,23
        {1, 3, 5},  // 12,14,24
        {1, 6},     // 12,34
        {2, 3, 6},  // 13,14,34
        {2, 5},     // 13,24
        {3, 4},     // 14,23
        {4, 5, 6},  // 23,24,34
    };
    CHECK(lines.lines == expect);
  }
  SUBCASE("two independent normals") {
    const MatroidLines lines =
        rank2_flats({{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(lines.lines == std::vector<std::vector<int>>{{1, 2}});
  }
  SUBCASE("three concurrent lines through the origin") {
    const MatroidLines lines = rank2_flats(
        {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}});
    CHECK(lines.lines == std::vector<std::vector<int>>{{1, 2, 3}});
  }
  SUBCASE("proportional normals are rejected") {
    CHECK_THROWS_AS(rank2_flats({{Int(1), Int(2)}, {Int(2), Int(4)}}),
                    InvalidInputError);
  }
  SUBCASE("zero normal is rejected") {
    CHECK_THROWS_AS(rank2_flats({{Int(0), Int(0)}, {Int(1), Int(0)}}),
                    InvalidInputError);
  }
}

TEST_CASE("arrangement relations") {
  SUBCASE("a single double point") {
    MatroidLines lines{2, {{1, 2}}};
    const QuadraticPresentation q = from_arrangement(lines);
    REQUIRE(q.relations.size() == 2);
    CHECK(q.relations[0] == std::vector<Int>{1});
    CHECK(q.relations[1] == std::vector<Int>{-1});
  }
  SUBCASE("relations of one line sum to zero") {
    MatroidLines lines{3, {{1, 2, 3}}};
    const QuadraticPresentation q = from_arrangement(lines);
    REQUIRE(q.relations.size() == 3);
    std::vector<Int> sum(3, Int(0));
    for (auto& r : q.relations)
      for (int c = 0; c < 3; ++c) sum[c] += r[c];
    CHECK(sum == std::vector<Int>{0, 0, 0});
    CHECK(cup_rank(q, Field::rationals()) == 2);
  }
  SUBCASE("braid arrangement relation span has rank 11") {
    const QuadraticPresentation q =
        from_arrangement(rank2_flats(braid_a3_normals()));
    CHECK(q.n == 6);
    CHECK(q.relations.size() == 18);
    CHECK(cup_rank(q, Field::rationals()) == 11);
  }
  SUBCASE("partition violations are rejected") {
    CHECK_THROWS_AS(from_arrangement(MatroidLines{3, {{1, 2}}}),
                    InvalidInputError);
    CHECK_THROWS_AS(
        from_arrangement(MatroidLines{3, {{1, 2, 3}, {1, 2}, {1, 3}, {2, 3}}}),
        InvalidInputError);
  }
}

TEST_CASE("cup rank") {
  SUBCASE("triangle link over Q") {
    const QuadraticPresentation q = from_link({{Int(0), Int(1), Int(1)},
                                               {Int(1), Int(0), Int(1)},
                                               {Int(1), Int(1), Int(0)}});
    CHECK(cup_rank(q, Field::rationals()) == 2);
  }
  SUBCASE("weight p drops rank mod p") {
    const QuadraticPresentation q =
        from_link({{Int(0), Int(5)}, {Int(5), Int(0)}});
    CHECK(cup_rank(q, Field::rationals()) == 1);
    CHECK(cup_rank(q, Field::mod(5)) == 0);
    CHECK(cup_rank(q, Field::mod(3)) == 1);
  }
  SUBCASE("no relations") {
    QuadraticPresentation q;
    q.n = 3;
    CHECK(cup_rank(q, Field::rationals()) == 0);
  }
  SUBCASE("non-prime modulus is rejected") {
    CHECK_THROWS_AS(Field::mod(6), InvalidInputError);
  }
}

TEST_CASE("complete graphs with unit weights have full modular cup rank") {
  std::mt19937_64 rng(31415);
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<Int>> l(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        l[i][j] = rng() % 2 ? 1 : -1;
        l[j][i] = l[i][j];
      }
    const QuadraticPresentation q = from_link(l);
    for (std::int64_t p : {2, 3, 5, 7})
      CHECK(cup_rank(q, Field::mod(p)) == n - 1);
  }
}
