#include "chenlie/gradedalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chenlie/errors.hpp"

namespace chenlie {

MonomialTable MonomialTable::build(int n, int q) {
  MonomialTable t;
  t.n = n;
  t.q = q;
  if (q < 0) return t;  // empty
  std::vector<int> cur(n, 0);
  // lex enumeration by recursion on the first variable
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      cur[var] = remaining;
      t.exps.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (n == 0) {
    if (q == 0) t.exps.push_back({});
    return t;
  }
  rec(rec, 0, q);
  return t;
}

std::string MonomialTable::label(long idx) const {
  const auto& e = exps.at(idx);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (any) os << '*';
    os << 's' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::vector<std::vector<long>> multiply_maps(const MonomialTable& from,
                                             const MonomialTable& to) {
  std::map<std::vector<int>, long> lookup;
  for (long i = 0; i < to.count(); ++i) lookup.emplace(to.exps[i], i);
  std::vector<std::vector<long>> mul(from.count(),
                                     std::vector<long>(from.n, -1));
  for (long i = 0; i < from.count(); ++i) {
    for (int v = 0; v < from.n; ++v) {
      auto e = from.exps[i];
      ++e[v];
      mul[i][v] = lookup.at(e);
    }
  }
  return mul;
}

namespace {

void check_block_size(long rows, long cols, long nnz_estimate,
                      const BlockLimits& limits) {
  if (rows > limits.max_side || cols > limits.max_side ||
      nnz_estimate > limits.max_entries)
    throw SizeLimitError(
        "graded block of size " + std::to_string(rows) + "x" +
        std::to_string(cols) + " (~" + std::to_string(nnz_estimate) +
        " entries) exceeds the configured cap; raise the limits to proceed");
}

struct TripleList {
  std::vector<std::array<int, 3>> triples;  // 1-based, i<j<k
};

TripleList triples_of(int n) {
  TripleList t;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) t.triples.push_back({i, j, k});
  return t;
}

}  // namespace

SparseIntMatrix koszul_d3_block(int n, int d, const BlockLimits& limits) {
  const WedgePairs wp{n};
  const MonomialTable rows_m = MonomialTable::build(n, d - 2);
  const MonomialTable cols_m = MonomialTable::build(n, d - 3);
  const TripleList tl = triples_of(n);
  const long rows = rows_m.count() * wp.dim();
  const long cols = cols_m.count() * static_cast<long>(tl.triples.size());
  check_block_size(rows, cols, 3 * cols, limits);
  SparseIntMatrix m(rows, cols);
  if (cols == 0) return m;
  const auto mul = multiply_maps(cols_m, rows_m);
  for (long u = 0; u < cols_m.count(); ++u) {
    for (long t = 0; t < static_cast<long>(tl.triples.size()); ++t) {
      const auto [i, j, k] = tl.triples[t];
      const long col = u * static_cast<long>(tl.triples.size()) + t;
      m.add(mul[u][i - 1] * wp.dim() + wp.index(j, k), col, 1);
      m.add(mul[u][j - 1] * wp.dim() + wp.index(i, k), col, -1);
      m.add(mul[u][k - 1] * wp.dim() + wp.index(i, j), col, 1);
    }
  }
  return m;
}

SparseIntMatrix relation_block(const QuadraticPresentation& q, int d,
                               const BlockLimits& limits) {
  if (d < 2) throw InvalidInputError("relation_block: need d >= 2");
  q.validate();
  const WedgePairs wp{q.n};
  const MonomialTable rows_m = MonomialTable::build(q.n, d - 2);
  const long mrel = static_cast<long>(q.relations.size());
  const long rows = rows_m.count() * wp.dim();
  const long cols = rows_m.count() * mrel;
  long nnz = 0;
  for (auto& r : q.relations)
    for (auto& x : r)
      if (x != 0) ++nnz;
  check_block_size(rows, cols, nnz * rows_m.count(), limits);
  SparseIntMatrix m(rows, cols);
  for (long u = 0; u < rows_m.count(); ++u)
    for (long k = 0; k < mrel; ++k) {
      const long col = u * mrel + k;
      for (long c = 0; c < wp.dim(); ++c)
        if (q.relations[k][c] != 0)
          m.add(u * wp.dim() + c, col, q.relations[k][c]);
    }
  return m;
}

GradedBlock graded_block(const QuadraticPresentation& q, int d,
                         const BlockLimits& limits) {
  if (d < 2) throw InvalidInputError("graded_block: need d >= 2");
  q.validate();
  GradedBlock b;
  b.n = q.n;
  b.degree = d;
  b.row_monos = MonomialTable::build(q.n, d - 2);
  b.col_monos = MonomialTable::build(q.n, d - 3);
  const SparseIntMatrix kz = koszul_d3_block(q.n, d, limits);
  const SparseIntMatrix rel = relation_block(q, d, limits);
  b.koszul_cols = kz.cols();
  b.relation_cols = rel.cols();
  check_block_size(kz.rows(), kz.cols() + rel.cols(), kz.nnz() + rel.nnz(),
                   limits);
  SparseIntMatrix m(kz.rows(), kz.cols() + rel.cols());
  for (long r = 0; r < kz.rows(); ++r) {
    SparseRow row = kz.row(r);
    for (auto& e : rel.row(r)) row.emplace_back(e.first + kz.cols(), e.second);
    m.set_row(r, std::move(row));
  }
  b.mat = std::move(m);
  return b;
}

std::string GradedBlock::row_label(long r) const {
  const WedgePairs wp{n};
  const long u = r / wp.dim();
  const auto [i, j] = wp.unrank(r % wp.dim());
  std::ostringstream os;
  os << row_monos.label(u) << " (x) y" << i << "^y" << j;
  return os.str();
}

std::string GradedBlock::col_label(long c) const {
  std::ostringstream os;
  if (c < koszul_cols) {
    const TripleList tl = triples_of(n);
    const long nt = static_cast<long>(tl.triples.size());
    const auto [i, j, k] = tl.triples[c % nt];
    os << col_monos.label(c / nt) << " (x) y" << i << "^y" << j << "^y" << k;
  } else {
    const long cc = c - koszul_cols;
    const long m = relation_cols / std::max<long>(row_monos.count(), 1);
    os << row_monos.label(cc / m) << " (x) r" << (cc % m + 1);
  }
  return os.str();
}

DegreeReport degree_report(const QuadraticPresentation& q, int d,
                           const std::vector<std::int64_t>& primes,
                           bool with_torsion, const BlockLimits& limits) {
  if (d < 2) throw InvalidInputError("degree_report: need d >= 2");
  for (auto p : primes)
    if (!is_prime(p))
      throw InvalidInputError("degree_report: " + std::to_string(p) +
                              " is not prime");
  const GradedBlock b = graded_block(q, d, limits);
  DegreeReport rep;
  rep.degree = d;
  const long rank_q_mat = b.mat.rank_over_q();
  rep.free_rank = b.mat.rows() - rank_q_mat;
  for (auto p : primes) rep.rank_fp[p] = b.mat.rows() - b.mat.rank_mod_p(p);
  if (with_torsion) {
    for (auto& x : b.mat.elementary_divisors())
      if (x != 1) rep.divisors.push_back(x);
    // consistency: divisors divisible by p account for the F_p rank drop
    for (auto& [p, rfp] : rep.rank_fp) {
      long cnt = 0;
      for (auto& x : rep.divisors)
        if (x % p == 0) ++cnt;
      if (cnt != rfp - rep.free_rank)
        throw Error("degree_report: rank/divisor bookkeeping mismatch");
    }
  }
  return rep;
}

ChenTable chen_table(const QuadraticPresentation& q, int kmax,
                     const std::vector<std::int64_t>& primes,
                     bool with_torsion, const BlockLimits& limits) {
  if (kmax < 2) throw InvalidInputError("chen_table: need kmax >= 2");
  q.validate();
  ChenTable t;
  t.n = q.n;
  t.kmax = kmax;
  t.theta.assign(kmax, 0);
  t.theta[0] = q.n;
  for (int d = 2; d <= kmax; ++d) {
    t.reports.push_back(degree_report(q, d, primes, with_torsion, limits));
    t.theta[d - 1] = t.reports.back().free_rank;
  }
  return t;
}

long linearized_B_dims(const GroupPresentation& p, int d, const Field& f) {
  if (d < 2) throw InvalidInputError("linearized_B_dims: need d >= 2");
  const LinearFormMatrix lam = linearized_alexander_matrix(p);
  const int n = p.n;
  const MonomialTable src = MonomialTable::build(n, d - 2);
  const MonomialTable dst = MonomialTable::build(n, d - 1);
  const MonomialTable full = MonomialTable::build(n, d);
  const auto mul = multiply_maps(src, dst);
  // degree-d piece of the image of the linearized Alexander map: one row
  // per (monomial u of degree d-2, relator k), giving u * row_k in the
  // basis (monomial of degree d-1) x generator
  SparseIntMatrix m(src.count() * lam.m, dst.count() * n);
  for (long u = 0; u < src.count(); ++u)
    for (long k = 0; k < lam.m; ++k) {
      const long r = u * lam.m + k;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          if (lam.coeff[k][j][i] != 0)
            m.add(r, mul[u][i] * n + j, lam.coeff[k][j][i]);
    }
  const long rank = f.kind == FieldKind::rationals ? m.rank_over_q()
                                                   : m.rank_mod_p(f.p);
  const long dim_a = n * dst.count() - rank;
  return dim_a - full.count();
}

std::set<std::int64_t> torsion_primes(const QuadraticPresentation& q, int kmax,
                                      const BlockLimits& limits) {
  if (kmax < 2) throw InvalidInputError("torsion_primes: need kmax >= 2");
  std::set<std::int64_t> out;
  for (int d = 2; d <= kmax; ++d) {
    const GradedBlock b = graded_block(q, d, limits);
    for (auto& x : b.mat.elementary_divisors())
      if (x != 1)
        for (auto p : prime_factors(x)) out.insert(p);
  }
  return out;
}

}  // namespace chenlie
