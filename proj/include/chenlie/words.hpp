#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chenlie/bigint.hpp"

namespace chenlie {

/*
 * A freely reduced word in F_n = <x_1,...,x_n>. Letters are nonzero ints:
 * +i is x_i, -i is x_i^{-1}. Reduction is performed on construction, so
 * Word equality is equality in the free group and Word is usable as an
 * ordered map key.
 */
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<int>& letters);
  static Word generator(int i, int sign = 1);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word pow(long e) const;
  long exponent_sum(int i) const;
  int max_generator() const;
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&);
  friend bool operator<(const Word&, const Word&);

 private:
  std::vector<int> letters_;
};

// Group commutator a b a^{-1} b^{-1}.
Word commutator(const Word& a, const Word& b);

// True iff every generator has exponent sum zero in w.
bool is_commutator_word(const Word& w);

/*
 * Word grammar: tokens `xK` (K >= 1), an optional `^E` with E a nonzero
 * signed integer, and `[A,B]` expanding to A B A^{-1} B^{-1}; nesting is
 * allowed and whitespace separates tokens. Rejects generator indices
 * above n and reports syntax errors with their position.
 */
Word parse_word(const std::string& text, int n);

// Element of the integral group ring ZF_n: reduced words with nonzero
// integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement of(Word w, Int c = 1);

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  GroupRingElement operator*(const Int& c) const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&);

 private:
  std::map<Word, Int> terms_;
};

// Fox free derivative with respect to x_i:
//   d_i(x_j) = delta_ij,  d_i(x_j^{-1}) = -delta_ij x_j^{-1},
//   d_i(uv) = d_i(u) + u d_i(v),
// extended linearly to group ring elements.
GroupRingElement fox_derivative(const Word& w, int i);
GroupRingElement fox_derivative(const GroupRingElement& e, int i);

struct GroupPresentation {
  int n = 0;
  std::vector<Word> relators;
  bool is_commutator_relators() const;
};

/*
 * The coefficients eps(i,j)(r) = augmentation of d_i(d_j(r)) for i < j.
 * For a commutator word these are antisymmetric: the value for i > j is
 * -eps(j,i), and the diagonal vanishes; eps() resolves all index orders
 * under that convention. The sign normalization makes
 * eps(1,2)((x1,x2)) = +1.
 */
class EpsilonMatrix {
 public:
  EpsilonMatrix(int n, std::size_t relators) : n_(n), data_(relators) {}

  int n() const { return n_; }
  std::size_t relator_count() const { return data_.size(); }

  void set_upper(std::size_t k, int i, int j, Int v);  // requires i < j
  Int eps(std::size_t k, int i, int j) const;          // any i, j

  const std::map<std::pair<int, int>, Int>& upper(std::size_t k) const {
    return data_[k];
  }

 private:
  int n_;
  std::vector<std::map<std::pair<int, int>, Int>> data_;
};

// Rejects presentations with a non-commutator relator, reporting its
// abelianized image.
EpsilonMatrix epsilon_matrix(const GroupPresentation& p);

// m x n matrix of linear forms in s_1..s_n: entry (k,j) is
// sum_i eps(i,j)(r_k) s_i, with the antisymmetric convention above.
struct LinearFormMatrix {
  long m = 0;
  long n = 0;
  // coeff[k][j][i] = coefficient of s_{i+1} in entry (k+1, j+1)
  std::vector<std::vector<std::vector<Int>>> coeff;
};

LinearFormMatrix linearized_alexander_matrix(const GroupPresentation& p);

// Abelianized group ring element: Laurent monomial exponent vector -> coeff.
using ExponentVector = std::vector<long>;
using LaurentElement = std::map<ExponentVector, Int>;

LaurentElement abelianize(const GroupRingElement& e, int n);

// Polynomial in s_1..s_n truncated past total degree q.
using TruncatedPoly = std::map<std::vector<int>, Int>;

// Substitutes t_i -> 1 + s_i and truncates at total degree q. Negative
// exponents expand through the integer binomial series of (1+s)^{-1}.
TruncatedPoly magnus_truncate(const LaurentElement& e, int q, int n);

// Coefficients of s_1..s_n in the degree-one part.
std::vector<Int> degree_one_part(const TruncatedPoly& p, int n);

}  // namespace chenlie
