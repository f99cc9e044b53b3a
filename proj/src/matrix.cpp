#include "chenlie/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "chenlie/errors.hpp"

namespace chenlie {

namespace {

struct OverflowSignal {};

// 64-bit integer that escalates to the arbitrary-precision path on overflow.
struct C64 {
  std::int64_t v = 0;
  C64() = default;
  C64(std::int64_t x) : v(x) {}
};

inline C64 operator+(C64 a, C64 b) {
  std::int64_t r;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw OverflowSignal{};
  return {r};
}
inline C64 operator-(C64 a, C64 b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowSignal{};
  return {r};
}
inline C64 operator*(C64 a, C64 b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowSignal{};
  return {r};
}
inline C64 operator-(C64 a) {
  if (a.v == std::numeric_limits<std::int64_t>::min()) throw OverflowSignal{};
  return {-a.v};
}
inline bool operator==(C64 a, C64 b) { return a.v == b.v; }
inline bool is_zero(C64 a) { return a.v == 0; }
inline bool is_zero(const Int& a) { return a.is_zero(); }
inline C64 abs_val(C64 a) { return a.v < 0 ? -a : a; }
inline Int abs_val(const Int& a) { return abs(a); }
inline bool abs_less(C64 a, C64 b) { return abs_val(a).v < abs_val(b).v; }
inline bool abs_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
inline bool is_unit(C64 a) { return a.v == 1 || a.v == -1; }
inline bool is_unit(const Int& a) { return a == 1 || a == -1; }
inline C64 gcd_val(C64 a, C64 b) {
  if (a.v == std::numeric_limits<std::int64_t>::min() ||
      b.v == std::numeric_limits<std::int64_t>::min())
    throw OverflowSignal{};
  return {std::gcd(std::llabs(a.v), std::llabs(b.v))};
}
inline Int gcd_val(const Int& a, const Int& b) { return gcd(a, b); }
inline C64 exact_div(C64 a, C64 b) { return {a.v / b.v}; }
inline Int exact_div(const Int& a, const Int& b) { return a / b; }
inline C64 narrow(const Int& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max())
    throw OverflowSignal{};
  return {static_cast<std::int64_t>(x)};
}

template <class T>
using Row = std::vector<std::pair<long, T>>;

// f1*u + f2*v with sorted merge, dropping zeros.
template <class T>
Row<T> axpy(const T& f1, const Row<T>& u, const T& f2, const Row<T>& v) {
  Row<T> out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
      T x = f1 * u[i].second;
      if (!is_zero(x)) out.emplace_back(u[i].first, x);
      ++i;
    } else if (i == u.size() || v[j].first < u[i].first) {
      T x = f2 * v[j].second;
      if (!is_zero(x)) out.emplace_back(v[j].first, x);
      ++j;
    } else {
      T x = f1 * u[i].second + f2 * v[j].second;
      if (!is_zero(x)) out.emplace_back(u[i].first, x);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
void remove_content(Row<T>& r) {
  if (r.empty()) return;
  T g = abs_val(r[0].second);
  for (std::size_t i = 1; i < r.size() && !is_unit(g); ++i)
    g = gcd_val(g, r[i].second);
  if (is_unit(g)) return;
  for (auto& e : r) e.second = exact_div(e.second, g);
}

template <class T>
const T* find_col(const Row<T>& r, long c) {
  auto it = std::lower_bound(
      r.begin(), r.end(), c,
      [](const std::pair<long, T>& e, long col) { return e.first < col; });
  return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

// Integer-preserving elimination; returns the rank over Q. Rows are scaled
// by the pivot-over-gcd factor, which leaves the rank unchanged, and the
// content of every combined row is divided out to bound entry growth.
template <class T>
long rank_exact(std::vector<Row<T>> rows, long cols) {
  const long m = static_cast<long>(rows.size());
  std::vector<char> alive(m, 1);
  std::vector<long> colcount(cols, 0);
  for (long r = 0; r < m; ++r) {
    if (rows[r].empty()) alive[r] = 0;
    for (auto& e : rows[r]) ++colcount[e.first];
  }
  long rank = 0;
  for (;;) {
    long c = -1;
    for (long j = 0; j < cols; ++j)
      if (colcount[j] > 0 && (c == -1 || colcount[j] < colcount[c])) c = j;
    if (c == -1) break;

    long piv = -1;
    for (long r = 0; r < m; ++r) {
      if (!alive[r]) continue;
      const T* e = find_col(rows[r], c);
      if (!e) continue;
      if (piv == -1) {
        piv = r;
        continue;
      }
      const T* pe = find_col(rows[piv], c);
      bool better = false;
      if (is_unit(*e) != is_unit(*pe))
        better = is_unit(*e);
      else if (rows[r].size() != rows[piv].size())
        better = rows[r].size() < rows[piv].size();
      else
        better = abs_less(*e, *pe);
      if (better) piv = r;
    }

    const T p = *find_col(rows[piv], c);
    for (long r = 0; r < m; ++r) {
      if (!alive[r] || r == piv) continue;
      const T* e = find_col(rows[r], c);
      if (!e) continue;
      T a = *e;
      T g = gcd_val(p, a);
      for (auto& old : rows[r]) --colcount[old.first];
      rows[r] = axpy(exact_div(p, g), rows[r], -exact_div(a, g), rows[piv]);
      remove_content(rows[r]);
      for (auto& e2 : rows[r]) ++colcount[e2.first];
      if (rows[r].empty()) alive[r] = 0;
    }
    for (auto& e : rows[piv]) --colcount[e.first];
    alive[piv] = 0;
    ++rank;
  }
  return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

}  // namespace

long SparseIntMatrix::nnz() const {
  long t = 0;
  for (auto& r : row_) t += static_cast<long>(r.size());
  return t;
}

void SparseIntMatrix::add(long r, long c, Int v) {
  if (v == 0) return;
  auto& rw = row_[r];
  auto it = std::lower_bound(
      rw.begin(), rw.end(), c,
      [](const std::pair<long, Int>& e, long col) { return e.first < col; });
  if (it != rw.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) rw.erase(it);
  } else {
    rw.insert(it, {c, std::move(v)});
  }
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (auto& e : row_[r]) t.row_[e.first].emplace_back(r, e.second);
  return t;
}

long SparseIntMatrix::rank_over_q() const {
  try {
    std::vector<Row<C64>> rows(rows_);
    for (long r = 0; r < rows_; ++r) {
      rows[r].reserve(row_[r].size());
      for (auto& e : row_[r]) rows[r].emplace_back(e.first, narrow(e.second));
    }
    return rank_exact<C64>(std::move(rows), cols_);
  } catch (const OverflowSignal&) {
    std::vector<Row<Int>> rows(row_);
    return rank_exact<Int>(std::move(rows), cols_);
  }
}

long SparseIntMatrix::rank_mod_p(std::int64_t p) const {
  if (p < 2 || !is_prime(p))
    throw InvalidInputError("rank_mod_p: modulus " + std::to_string(p) +
                            " is not prime");
  std::vector<Row<std::int64_t>> rows(rows_);
  for (long r = 0; r < rows_; ++r) {
    for (auto& e : row_[r]) {
      std::int64_t v = static_cast<std::int64_t>(e.second % p);
      if (v < 0) v += p;
      if (v != 0) rows[r].emplace_back(e.first, v);
    }
  }
  std::vector<char> alive(rows_, 1);
  std::vector<long> colcount(cols_, 0);
  for (long r = 0; r < rows_; ++r) {
    if (rows[r].empty()) alive[r] = 0;
    for (auto& e : rows[r]) ++colcount[e.first];
  }
  long rank = 0;
  for (;;) {
    long c = -1;
    for (long j = 0; j < cols_; ++j)
      if (colcount[j] > 0 && (c == -1 || colcount[j] < colcount[c])) c = j;
    if (c == -1) break;
    long piv = -1;
    for (long r = 0; r < rows_; ++r) {
      if (!alive[r]) continue;
      if (!find_col(rows[r], c)) continue;
      if (piv == -1 || rows[r].size() < rows[piv].size()) piv = r;
    }
    const std::int64_t pval = *find_col(rows[piv], c);
    const std::int64_t pinv = mod_inverse(pval, p);
    for (long r = 0; r < rows_; ++r) {
      if (!alive[r] || r == piv) continue;
      const std::int64_t* e = find_col(rows[r], c);
      if (!e) continue;
      // r <- r - (a * pinv) * pivot, all mod p
      const std::int64_t f = (__int128(*e) * pinv) % p;
      Row<std::int64_t> out;
      out.reserve(rows[r].size() + rows[piv].size());
      std::size_t i = 0, j = 0;
      const auto& u = rows[r];
      const auto& v = rows[piv];
      while (i < u.size() || j < v.size()) {
        if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
          out.push_back(u[i++]);
        } else if (i == u.size() || v[j].first < u[i].first) {
          std::int64_t x = (p - (__int128(f) * v[j].second) % p) % p;
          if (x) out.emplace_back(v[j].first, x);
          ++j;
        } else {
          std::int64_t x =
              ((u[i].second - (__int128(f) * v[j].second) % p) % p + p) % p;
          if (x) out.emplace_back(u[i].first, x);
          ++i;
          ++j;
        }
      }
      for (auto& old : rows[r]) --colcount[old.first];
      rows[r] = std::move(out);
      for (auto& e2 : rows[r]) ++colcount[e2.first];
      if (rows[r].empty()) alive[r] = 0;
    }
    for (auto& e : rows[piv]) --colcount[e.first];
    alive[piv] = 0;
    ++rank;
  }
  return rank;
}

namespace {

// Classical Smith reduction on a dense core. Returns |diagonal| in
// divisibility order.
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
  const long m = static_cast<long>(a.size());
  const long n = m ? static_cast<long>(a[0].size()) : 0;
  std::vector<Int> divisors;
  long k = 0;
  while (k < m && k < n) {
    // locate the smallest nonzero entry in the trailing submatrix
    long bi = -1, bj = -1;
    for (long i = k; i < m; ++i)
      for (long j = k; j < n; ++j)
        if (a[i][j] != 0 &&
            (bi == -1 || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == -1) break;
    std::swap(a[k], a[bi]);
    for (long i = k; i < m; ++i) std::swap(a[i][k], a[i][bj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (long i = k + 1; i < m; ++i) {
        if (a[i][k] == 0) continue;
        Int q = a[i][k] / a[k][k];
        for (long j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) {  // remainder becomes the new, smaller pivot
          std::swap(a[i], a[k]);
          clean = false;
        }
      }
      for (long j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        Int q = a[k][j] / a[k][k];
        for (long i = k; i < m; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) {
          for (long i = k; i < m; ++i) std::swap(a[i][j], a[i][k]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide every remaining entry
        for (long i = k + 1; i < m && clean; ++i)
          for (long j = k + 1; j < n && clean; ++j)
            if (a[i][j] % a[k][k] != 0) {
              for (long jj = k; jj < n; ++jj) a[k][jj] += a[i][jj];
              clean = false;
            }
      }
    }
    divisors.push_back(abs(a[k][k]));
    ++k;
  }
  return divisors;
}

}  // namespace

std::vector<Int> SparseIntMatrix::elementary_divisors() const {
  // Phase 1: peel +-1 pivots sitting in a singleton row or a singleton
  // column. Clearing those costs no fill and no entry growth, and dropping
  // the pivot row and column is a unimodular reduction contributing
  // divisor 1.
  std::vector<SparseRow> rows(row_);
  const long m = rows_;
  std::vector<char> alive(m, 1);
  std::vector<long> colcount(cols_, 0);
  for (long r = 0; r < m; ++r) {
    if (rows[r].empty()) alive[r] = 0;
    for (auto& e : rows[r]) ++colcount[e.first];
  }
  long ones = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (long r = 0; r < m; ++r) {
      if (!alive[r]) continue;
      if (rows[r].size() == 1 && is_unit(rows[r][0].second)) {
        // singleton row: row operations blank the pivot column elsewhere
        const long c = rows[r][0].first;
        for (long r2 = 0; r2 < m; ++r2) {
          if (!alive[r2] || r2 == r) continue;
          auto it = std::lower_bound(
              rows[r2].begin(), rows[r2].end(), c,
              [](const std::pair<long, Int>& e, long col) {
                return e.first < col;
              });
          if (it != rows[r2].end() && it->first == c) {
            rows[r2].erase(it);
            --colcount[c];
            if (rows[r2].empty()) alive[r2] = 0;
          }
        }
        --colcount[c];
        alive[r] = 0;
        ++ones;
        progress = true;
        continue;
      }
      // unit entry in a singleton column: column operations blank the rest
      // of this row without touching other rows
      for (auto& e : rows[r]) {
        if (colcount[e.first] == 1 && is_unit(e.second)) {
          for (auto& e2 : rows[r]) --colcount[e2.first];
          rows[r].clear();
          alive[r] = 0;
          ++ones;
          progress = true;
          break;
        }
      }
    }
  }

  // Phase 2: the divisors depend only on the row lattice, so reduce the
  // surviving rows to a Hermite basis (bounded entries) first.
  HermiteBasis h(cols_);
  for (long r = 0; r < m; ++r)
    if (alive[r]) h.insert(std::move(rows[r]));
  h.normalize();

  // Phase 3: dense Smith form on the reduced core.
  std::vector<long> colmap(cols_, -1);
  const auto hrows = h.rows();
  long ncols = 0;
  for (auto& hr : hrows)
    for (auto& e : hr)
      if (colmap[e.first] == -1) colmap[e.first] = ncols++;
  const long nrows = static_cast<long>(hrows.size());
  if (static_cast<long long>(nrows) * ncols > 25'000'000LL)
    throw SizeLimitError("elementary_divisors: residual core " +
                         std::to_string(nrows) + "x" + std::to_string(ncols) +
                         " is past the dense reduction cap");
  std::vector<std::vector<Int>> core(nrows, std::vector<Int>(ncols, 0));
  for (long r = 0; r < nrows; ++r)
    for (auto& e : hrows[r]) core[r][colmap[e.first]] = e.second;
  std::vector<Int> rest = dense_snf(std::move(core));
  std::vector<Int> out(ones, Int(1));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

SparseRow row_axpy(const Int& a, const SparseRow& u, const Int& b,
                   const SparseRow& v) {
  return axpy<Int>(a, u, b, v);
}

bool HermiteBasis::insert(SparseRow v) {
  bool grew = false;
  while (!v.empty()) {
    const long c = v[0].first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (v[0].second < 0)
        for (auto& e : v) e.second = -e.second;
      rows_.emplace(c, std::move(v));
      return true;
    }
    SparseRow& r = it->second;
    const Int p = r[0].second;  // > 0
    const Int a = v[0].second;
    if (a % p == 0) {
      v = row_axpy(1, v, -(a / p), r);
      continue;
    }
    // extended gcd: g = s*p + t*a
    Int s = 1, t = 0, sp = 0, tp = 1, x = p, y = a;
    while (y != 0) {
      Int q = x / y;
      x -= q * y;
      std::swap(x, y);
      s -= q * sp;
      std::swap(s, sp);
      t -= q * tp;
      std::swap(t, tp);
    }
    // x = gcd > 0 here since p > 0 drives the loop
    SparseRow combined = row_axpy(s, r, t, v);
    SparseRow reduced = row_axpy(p / x, v, -(a / x), r);
    if (combined[0].second < 0)
      for (auto& e : combined) e.second = -e.second;
    it->second = std::move(combined);
    v = std::move(reduced);
    grew = true;  // pivot value strictly shrank
  }
  return grew;
}

void HermiteBasis::normalize() {
  // reduce entries above each pivot into [0, pivot)
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    const long c = it->first;
    const Int p = it->second[0].second;
    for (auto jt = rows_.begin(); jt != it; ++jt) {
      const Int* e = find_col(jt->second, c);
      if (!e) continue;
      Int q = *e % p;
      if (q < 0) q += p;
      q = (*e - q) / p;
      if (q != 0) jt->second = row_axpy(1, jt->second, -q, it->second);
    }
  }
}

std::vector<SparseRow> HermiteBasis::rows() const {
  std::vector<SparseRow> out;
  out.reserve(rows_.size());
  for (auto& kv : rows_) out.push_back(kv.second);
  return out;
}

SparseIntMatrix HermiteBasis::to_matrix() const {
  SparseIntMatrix m(rank(), dim_);
  long r = 0;
  for (auto& kv : rows_) m.set_row(r++, kv.second);
  return m;
}

}  // namespace chenlie
