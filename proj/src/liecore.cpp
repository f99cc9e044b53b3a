#include "chenlie/liecore.hpp"

#include <algorithm>
#include <mutex>

#include "chenlie/errors.hpp"

namespace chenlie {

long witt_rank(long n, long d) {
  if (n < 1 || d < 1) throw InvalidInputError("witt_rank: need n, d >= 1");
  Int sum = 0;
  for (long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    Int p = 1;
    for (long t = 0; t < d / e; ++t) p *= n;
    sum += mu * p;
  }
  sum /= d;
  if (sum > 1'000'000'000L)
    throw SizeLimitError("witt_rank(" + std::to_string(n) + "," +
                         std::to_string(d) + ") exceeds supported range");
  return static_cast<long>(sum);
}

namespace {

// Lyndon words of length exactly d over {0..n-1}, lex order (Duval).
std::vector<std::string> lyndon_words(int n, int d) {
  std::vector<std::string> out;
  std::string w(1, char(0));
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    // extend periodically to length d, then increment
    std::string t = w;
    while (static_cast<int>(t.size()) < d) t.push_back(t[t.size() % w.size()]);
    w = t;
    while (!w.empty() && w.back() == char(n - 1)) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiePoly poly_mul_sub(const LiePoly& a, const LiePoly& b) {
  // a*b - b*a
  LiePoly out;
  auto acc = [&out](std::string w, Int c) {
    auto it = out.find(w);
    if (it == out.end()) {
      out.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (auto& s : a)
    for (auto& t : b) {
      acc(s.first + t.first, s.second * t.second);
      acc(t.first + s.first, -(s.second * t.second));
    }
  return out;
}

}  // namespace

std::shared_ptr<const LyndonTable> LyndonTable::get(int n, int maxdeg) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const LyndonTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end() && it->second->maxdeg() >= maxdeg) return it->second;
  auto table = std::shared_ptr<const LyndonTable>(new LyndonTable(n, maxdeg));
  cache[n] = table;
  return table;
}

LyndonTable::LyndonTable(int n, int maxdeg) : n_(n), maxdeg_(maxdeg) {
  if (n < 1) throw InvalidInputError("LyndonTable: need n >= 1");
  if (maxdeg < 1) throw InvalidInputError("LyndonTable: need maxdeg >= 1");
  words_.resize(maxdeg + 1);
  index_.resize(maxdeg + 1);
  polys_.resize(maxdeg + 1);
  rmul_.resize(maxdeg + 1);
  for (int d = 1; d <= maxdeg; ++d) {
    words_[d] = lyndon_words(n, d);
    if (static_cast<long>(words_[d].size()) != witt_rank(n, d))
      throw Error("LyndonTable: Lyndon count disagrees with the Witt rank");
    for (long i = 0; i < static_cast<long>(words_[d].size()); ++i)
      index_[d].emplace(words_[d][i], i);
  }
  // bracket polynomials by standard factorization
  for (int d = 1; d <= maxdeg; ++d) {
    polys_[d].resize(words_[d].size());
    for (long i = 0; i < static_cast<long>(words_[d].size()); ++i) {
      const std::string& w = words_[d][i];
      if (d == 1) {
        polys_[d][i] = LiePoly{{w, Int(1)}};
        continue;
      }
      // longest proper Lyndon suffix = lex-least proper suffix
      std::size_t best = 1;
      for (std::size_t s = 2; s < w.size(); ++s)
        if (w.compare(s, std::string::npos, w, best, std::string::npos) < 0)
          best = s;
      const std::string u = w.substr(0, best), v = w.substr(best);
      const LiePoly& pu =
          polys_[u.size()][index_[u.size()].at(u)];
      const LiePoly& pv =
          polys_[v.size()][index_[v.size()].at(v)];
      polys_[d][i] = poly_mul_sub(pu, pv);
      if (polys_[d][i].begin()->first != w || polys_[d][i].begin()->second != 1)
        throw Error("LyndonTable: triangularity violated");
    }
  }
  // right bracket with a generator
  for (int d = 1; d < maxdeg; ++d) {
    rmul_[d].resize(words_[d].size());
    for (long i = 0; i < static_cast<long>(words_[d].size()); ++i) {
      rmul_[d][i].resize(n);
      for (int g = 0; g < n; ++g) {
        LiePoly gp{{std::string(1, char(g)), Int(1)}};
        rmul_[d][i][g] = decompose(poly_mul_sub(polys_[d][i], gp), d + 1);
      }
    }
  }
  // derived subalgebra pieces of the free Lie algebra
  derived_.reserve(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) derived_.emplace_back(d >= 1 ? dim(d) : 0);
  for (int d = 4; d <= maxdeg; ++d) {
    for (int a = 2; a <= d - 2; ++a) {
      const int b = d - a;
      if (b < a) break;
      for (long i = 0; i < dim(a); ++i) {
        const long jstart = (a == b) ? i + 1 : 0;
        for (long j = jstart; j < dim(b); ++j) {
          SparseRow r = decompose(poly_mul_sub(polys_[a][i], polys_[b][j]), d);
          if (!r.empty()) derived_[d].insert(std::move(r));
        }
      }
    }
    derived_[d].normalize();
  }
}

long LyndonTable::word_index(int d, const std::string& w) const {
  auto it = index_[d].find(w);
  if (it == index_[d].end())
    throw InvalidInputError("LyndonTable: not a Lyndon word of degree " +
                            std::to_string(d));
  return it->second;
}

SparseRow LyndonTable::decompose(const LiePoly& p, int d) const {
  LiePoly rest = p;
  SparseRow out;
  while (!rest.empty()) {
    const auto& lead = *rest.begin();
    if (static_cast<int>(lead.first.size()) != d)
      throw Error("decompose: inhomogeneous polynomial");
    auto it = index_[d].find(lead.first);
    if (it == index_[d].end())
      throw Error("decompose: leading word is not Lyndon; input is not a Lie "
                  "element");
    const Int c = lead.second;
    const long idx = it->second;
    for (auto& t : polys_[d][idx]) {
      auto jt = rest.find(t.first);
      if (jt == rest.end()) {
        rest.emplace(t.first, -c * t.second);
      } else {
        jt->second -= c * t.second;
        if (jt->second == 0) rest.erase(jt);
      }
    }
    out.emplace_back(idx, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LiePoly LyndonTable::poly_of(int d, const SparseRow& v) const {
  LiePoly out;
  for (auto& e : v)
    for (auto& t : polys_[d][e.first]) {
      auto it = out.find(t.first);
      if (it == out.end()) {
        out.emplace(t.first, e.second * t.second);
      } else {
        it->second += e.second * t.second;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

SparseRow LyndonTable::bracket(int da, const SparseRow& a, int db,
                               const SparseRow& b) const {
  return decompose(poly_mul_sub(poly_of(da, a), poly_of(db, b)), da + db);
}

SparseRow bracket_expand(const LyndonTable& t, int da, long idx_a, int db,
                         long idx_b) {
  if (da + db > t.maxdeg())
    throw SizeLimitError("bracket_expand: degree beyond table cutoff");
  return t.decompose(poly_mul_sub(t.poly(da, idx_a), t.poly(db, idx_b)),
                     da + db);
}

namespace {

void check_dims(int n, int kmax, long dim_cap) {
  if (kmax < 2) throw InvalidInputError("need kmax >= 2");
  for (int d = 1; d <= kmax; ++d)
    if (witt_rank(n, d) > dim_cap)
      throw SizeLimitError("free Lie algebra piece of degree " +
                           std::to_string(d) + " has rank " +
                           std::to_string(witt_rank(n, d)) +
                           ", past the configured cap " +
                           std::to_string(dim_cap));
}

}  // namespace

GradedSubspace ideal_degree_pieces(const QuadraticPresentation& q, int kmax,
                                   long dim_cap) {
  q.validate();
  check_dims(q.n, kmax, dim_cap);
  auto table = LyndonTable::get(q.n, kmax);
  GradedSubspace out;
  out.n = q.n;
  out.kmax = kmax;
  for (int d = 0; d <= kmax; ++d)
    out.piece.emplace_back(d >= 1 ? table->dim(d) : 0);
  // degree 2: the relation span; the degree-2 Lyndon words are exactly the
  // pairs (i<j) in lex order, so wedge coordinates carry over unchanged
  for (auto& r : q.relations) {
    SparseRow v;
    for (long c = 0; c < static_cast<long>(r.size()); ++c)
      if (r[c] != 0) v.emplace_back(c, r[c]);
    if (!v.empty()) out.piece[2].insert(std::move(v));
  }
  out.piece[2].normalize();
  // higher degrees: bracket a spanning set with the generators
  for (int d = 2; d < kmax; ++d) {
    for (auto& row : out.piece[d].rows()) {
      for (int g = 0; g < q.n; ++g) {
        SparseRow acc;
        for (auto& e : row)
          acc = row_axpy(1, acc, e.second, table->right_bracket(d, e.first, g));
        if (!acc.empty()) out.piece[d + 1].insert(std::move(acc));
      }
    }
    out.piece[d + 1].normalize();
  }
  return out;
}

namespace {

QuotientDegreeReport quotient_report(int d, long ambient,
                                     const HermiteBasis& sub) {
  QuotientDegreeReport rep;
  rep.degree = d;
  std::vector<Int> div = sub.to_matrix().elementary_divisors();
  rep.rank = ambient - static_cast<long>(div.size());
  for (auto& x : div)
    if (x != 1) rep.divisors.push_back(x);
  return rep;
}

}  // namespace

std::pair<long, std::vector<Int>> oracle_infinitesimal_alexander(
    const QuadraticPresentation& q, int d, long dim_cap) {
  if (d < 2)
    throw InvalidInputError("oracle_infinitesimal_alexander: need d >= 2");
  check_dims(q.n, d, dim_cap);
  auto table = LyndonTable::get(q.n, d);
  GradedSubspace ideal = ideal_degree_pieces(q, d, dim_cap);
  HermiteBasis u(table->dim(d));
  for (auto& row : table->derived_piece(d).rows()) u.insert(row);
  for (auto& row : ideal.piece[d].rows()) u.insert(std::move(row));
  u.normalize();
  QuotientDegreeReport rep = quotient_report(d, table->dim(d), u);
  return {rep.rank, std::move(rep.divisors)};
}

DerivedQuotientReport derived_quotient_ranks(const QuadraticPresentation& q,
                                             int i, int kmax, long dim_cap) {
  if (i < 1) throw InvalidInputError("derived_quotient_ranks: need i >= 1");
  check_dims(q.n, kmax, dim_cap);
  auto table = LyndonTable::get(q.n, kmax);
  GradedSubspace ideal = ideal_degree_pieces(q, kmax, dim_cap);

  DerivedQuotientReport out;
  out.n = q.n;
  out.i = i;
  out.kmax = kmax;

  // lattices U_d with (H/H^(i))_d = L_d / U_d
  std::vector<HermiteBasis> u;
  for (int d = 0; d <= kmax; ++d) u.emplace_back(d >= 1 ? table->dim(d) : 0);

  if (i == 1) {
    // derived subalgebra: everything in degrees >= 2
    for (int d = 2; d <= kmax; ++d)
      for (long b = 0; b < table->dim(d); ++b) u[d].insert({{b, Int(1)}});
  } else {
    // level 2: derived subalgebra of the free algebra plus the ideal
    for (int d = 2; d <= kmax; ++d) {
      for (auto& row : table->derived_piece(d).rows()) u[d].insert(row);
      for (auto& row : ideal.piece[d].rows()) u[d].insert(std::move(row));
      u[d].normalize();
    }
    // levels 3..i: brackets of the previous level plus the ideal
    for (int level = 3; level <= i; ++level) {
      std::vector<HermiteBasis> next;
      for (int d = 0; d <= kmax; ++d)
        next.emplace_back(d >= 1 ? table->dim(d) : 0);
      for (int d = 2; d <= kmax; ++d) {
        for (int a = 1; a <= d - 1; ++a) {
          const int b = d - a;
          if (b < a) break;
          const auto rows_a = u[a].rows();
          const auto rows_b = u[b].rows();
          for (std::size_t x = 0; x < rows_a.size(); ++x) {
            const std::size_t ystart = (a == b) ? x + 1 : 0;
            for (std::size_t y = ystart; y < rows_b.size(); ++y) {
              SparseRow r = table->bracket(a, rows_a[x], b, rows_b[y]);
              if (!r.empty()) next[d].insert(std::move(r));
            }
          }
        }
        for (auto& row : ideal.piece[d].rows()) next[d].insert(std::move(row));
        next[d].normalize();
      }
      u = std::move(next);
    }
  }

  if ((Int(1) << i) > kmax)
    out.note = "derived series level " + std::to_string(i) +
               " starts in degree " + Int(Int(1) << i).str() +
               "; on degrees <= " + std::to_string(kmax) +
               " the quotient equals the full algebra";

  for (int d = 1; d <= kmax; ++d)
    out.reports.push_back(quotient_report(d, table->dim(d), u[d]));
  return out;
}

}  // namespace chenlie
