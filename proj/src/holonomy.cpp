#include "chenlie/holonomy.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chenlie/errors.hpp"
#include "chenlie/matrix.hpp"

namespace chenlie {

long WedgePairs::index(int i, int j) const {
  if (!(1 <= i && i < j && j <= n))
    throw InvalidInputError("WedgePairs: need 1 <= i < j <= n");
  const long a = i - 1;
  return a * n - a * (a + 1) / 2 + (j - i) - 1;
}

std::pair<int, int> WedgePairs::unrank(long k) const {
  for (int i = 1; i < n; ++i) {
    long block = n - i;
    if (k < block) return {i, i + 1 + static_cast<int>(k)};
    k -= block;
  }
  throw InvalidInputError("WedgePairs: index out of range");
}

void QuadraticPresentation::validate() const {
  const WedgePairs wp{n};
  for (auto& r : relations)
    if (static_cast<long>(r.size()) != wp.dim())
      throw InvalidInputError(
          "QuadraticPresentation: relation vector length must be C(n,2)");
}

LinkingGraph LinkingGraph::from_matrix(const std::vector<std::vector<Int>>& l) {
  const int n = static_cast<int>(l.size());
  for (auto& row : l)
    if (static_cast<int>(row.size()) != n)
      throw InvalidInputError("linking matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (l[i][i] != 0)
      throw InvalidInputError("linking matrix must have zero diagonal");
    for (int j = 0; j < n; ++j)
      if (l[i][j] != l[j][i])
        throw InvalidInputError("linking matrix must be symmetric");
  }
  LinkingGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (l[i][j] != 0) g.edges[{i + 1, j + 1}] = l[i][j];
  return g;
}

void MatroidLines::validate() const {
  for (auto& d : lines) {
    if (d.size() < 2)
      throw InvalidInputError("MatroidLines: lines must have size >= 2");
    if (!std::is_sorted(d.begin(), d.end()))
      throw InvalidInputError("MatroidLines: line members must be sorted");
    for (int x : d)
      if (x < 1 || x > n)
        throw InvalidInputError("MatroidLines: member out of range");
  }
  // every pair in exactly one line
  std::map<std::pair<int, int>, int> cover;
  for (auto& d : lines)
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b) ++cover[{d[a], d[b]}];
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto it = cover.find({i, j});
      const int c = it == cover.end() ? 0 : it->second;
      if (c == 0)
        throw InvalidInputError("MatroidLines: pair {" + std::to_string(i) +
                                "," + std::to_string(j) +
                                "} covered by no line");
      if (c > 1)
        throw InvalidInputError("MatroidLines: pair {" + std::to_string(i) +
                                "," + std::to_string(j) +
                                "} covered by more than one line");
    }
}

Field Field::mod(std::int64_t p) {
  if (!is_prime(p))
    throw InvalidInputError("Field: " + std::to_string(p) + " is not prime");
  return {FieldKind::prime, p};
}

QuadraticPresentation from_group(const GroupPresentation& p) {
  const EpsilonMatrix eps = epsilon_matrix(p);
  const WedgePairs wp{p.n};
  QuadraticPresentation q;
  q.n = p.n;
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    std::vector<Int> v(wp.dim(), Int(0));
    for (auto& e : eps.upper(k))
      v[wp.index(e.first.first, e.first.second)] = e.second;
    q.relations.push_back(std::move(v));
  }
  return q;
}

QuadraticPresentation from_link(const std::vector<std::vector<Int>>& l) {
  const LinkingGraph g = LinkingGraph::from_matrix(l);  // validates
  const int n = g.n;
  const WedgePairs wp{n};
  QuadraticPresentation q;
  q.n = n;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Int> v(wp.dim(), Int(0));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Int& w = l[i - 1][j - 1];
      if (w == 0) continue;
      // [y_i, y_j] = +(y_i ^ y_j) for i < j, -(y_j ^ y_i) for j < i
      if (i < j)
        v[wp.index(i, j)] += w;
      else
        v[wp.index(j, i)] -= w;
    }
    q.relations.push_back(std::move(v));
  }
  return q;
}

namespace {

long exact_rank_of_vectors(const std::vector<const std::vector<Int>*>& vs,
                           long dim) {
  SparseIntMatrix m(static_cast<long>(vs.size()), dim);
  for (long r = 0; r < static_cast<long>(vs.size()); ++r)
    for (long c = 0; c < dim; ++c)
      if ((*vs[r])[c] != 0) m.add(r, c, (*vs[r])[c]);
  return m.rank_over_q();
}

}  // namespace

MatroidLines rank2_flats(const std::vector<std::vector<Int>>& normals) {
  const int n = static_cast<int>(normals.size());
  if (n < 2) throw InvalidInputError("rank2_flats: need at least two normals");
  const long dim = static_cast<long>(normals[0].size());
  for (auto& v : normals) {
    if (static_cast<long>(v.size()) != dim)
      throw InvalidInputError("rank2_flats: normals must have equal length");
    bool zero = true;
    for (auto& x : v) zero = zero && x == 0;
    if (zero) throw InvalidInputError("rank2_flats: zero normal");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (exact_rank_of_vectors({&normals[a], &normals[b]}, dim) < 2)
        throw InvalidInputError(
            "rank2_flats: normals " + std::to_string(a + 1) + " and " +
            std::to_string(b + 1) + " are proportional (repeated hyperplane)");

  std::set<std::vector<int>> lines;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> line;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) {
          line.push_back(c + 1);
          continue;
        }
        if (exact_rank_of_vectors({&normals[a], &normals[b], &normals[c]},
                                  dim) == 2)
          line.push_back(c + 1);
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  MatroidLines out;
  out.n = n;
  out.lines.assign(lines.begin(), lines.end());
  out.validate();
  return out;
}

QuadraticPresentation from_arrangement(const MatroidLines& lines) {
  lines.validate();
  const WedgePairs wp{lines.n};
  QuadraticPresentation q;
  q.n = lines.n;
  for (auto& d : lines.lines) {
    for (int j : d) {
      std::vector<Int> v(wp.dim(), Int(0));
      for (int i : d) {
        if (i == j) continue;
        if (j < i)
          v[wp.index(j, i)] += 1;
        else
          v[wp.index(i, j)] -= 1;
      }
      q.relations.push_back(std::move(v));
    }
  }
  return q;
}

long cup_rank(const QuadraticPresentation& q, const Field& f) {
  q.validate();
  const WedgePairs wp{q.n};
  SparseIntMatrix m(static_cast<long>(q.relations.size()), wp.dim());
  for (long r = 0; r < static_cast<long>(q.relations.size()); ++r)
    for (long c = 0; c < wp.dim(); ++c)
      if (q.relations[r][c] != 0) m.add(r, c, q.relations[r][c]);
  if (f.kind == FieldKind::rationals) return m.rank_over_q();
  return m.rank_mod_p(f.p);
}

}  // namespace chenlie
