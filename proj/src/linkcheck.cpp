#include "chenlie/linkcheck.hpp"

#include <algorithm>
#include <set>

#include "chenlie/closedforms.hpp"
#include "chenlie/errors.hpp"
#include "chenlie/matrix.hpp"

namespace chenlie {

namespace {

bool spanning_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<int> comp(n + 1);
  for (int i = 1; i <= n; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int parts = n;
  for (auto& e : edges) {
    int a = find(e.first), b = find(e.second);
    if (a != b) {
      comp[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

bool connected_mod_p(const LinkingGraph& g, std::int64_t p) {
  if (!is_prime(p))
    throw InvalidInputError("connected_mod_p: " + std::to_string(p) +
                            " is not prime");
  std::vector<std::pair<int, int>> surviving;
  for (auto& e : g.edges)
    if (e.second % p != 0) surviving.push_back(e.first);
  return spanning_connected(g.n, surviving);
}

StrongConnectivity strongly_connected(const LinkingGraph& g) {
  std::vector<std::pair<int, int>> all;
  for (auto& e : g.edges) all.push_back(e.first);
  if (!spanning_connected(g.n, all)) return {false, 0};
  std::set<std::int64_t> ps;
  for (auto& e : g.edges)
    for (auto p : prime_factors(e.second)) ps.insert(p);
  for (auto p : ps)
    if (!connected_mod_p(g, p)) return {false, p};
  return {true, 0};
}

bool is_z_generic(const std::vector<std::vector<Int>>& linking_matrix) {
  const LinkingGraph g = LinkingGraph::from_matrix(linking_matrix);
  const int n = g.n;
  if (n == 1) return true;
  const WedgePairs wp{n};
  // full relation set [y_i, sum_j l_ij y_j], i = 1..n; the rows sum to
  // zero, so they span the same lattice as the n-1 presentation relations
  std::vector<std::vector<Int>> rel(n, std::vector<Int>(wp.dim(), Int(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Int& w = linking_matrix[i - 1][j - 1];
      if (w == 0) continue;
      if (i < j)
        rel[i - 1][wp.index(i, j)] += w;
      else
        rel[i - 1][wp.index(j, i)] -= w;
    }
  for (int c = 1; c <= n; ++c) {
    // project onto the coordinates pairing each other component with c
    SparseIntMatrix m(n, n - 1);
    for (int r = 0; r < n; ++r) {
      long col = 0;
      for (int i = 1; i <= n; ++i) {
        if (i == c) continue;
        const Int& v = rel[r][i < c ? wp.index(i, c) : wp.index(c, i)];
        if (v != 0) m.add(r, col, v);
        ++col;
      }
    }
    const std::vector<Int> div = m.elementary_divisors();
    if (static_cast<long>(div.size()) == n - 1 &&
        std::all_of(div.begin(), div.end(),
                    [](const Int& x) { return x == 1; }))
      return true;
  }
  return false;
}

MurasugiReport murasugi_report(const std::vector<std::vector<Int>>& l,
                               int kmax, const BlockLimits& limits) {
  if (kmax < 2) throw InvalidInputError("murasugi_report: need kmax >= 2");
  const LinkingGraph g = LinkingGraph::from_matrix(l);
  const QuadraticPresentation q = from_link(l);
  MurasugiReport rep;
  rep.n = g.n;
  rep.kmax = kmax;

  std::vector<std::pair<int, int>> all;
  for (auto& e : g.edges) all.push_back(e.first);
  rep.graph_connected = spanning_connected(g.n, all);

  rep.cup_rank_q = cup_rank(q, Field::rationals());
  rep.cup_product_onto = rep.cup_rank_q == g.n - 1;

  std::set<std::int64_t> primes{2, 3, 5};
  for (auto& e : g.edges)
    for (auto p : prime_factors(e.second)) primes.insert(p);
  const ChenTable table =
      chen_table(q, kmax, {primes.begin(), primes.end()}, true, limits);
  rep.theta = table.theta;

  rep.free_theta.assign(kmax, 0);
  rep.theta_matches_free = true;
  for (int k = 1; k <= kmax; ++k) {
    rep.free_theta[k - 1] = g.n >= 2
                                ? static_cast<long>(free_chen_rank(g.n - 1, k))
                                : 0;
    if (k >= 2 && rep.theta[k - 1] != rep.free_theta[k - 1])
      rep.theta_matches_free = false;
  }
  rep.theta2_matches = kmax < 2 || rep.theta[1] == rep.free_theta[1];

  rep.strong = strongly_connected(g);
  rep.z_generic = is_z_generic(l);

  rep.torsion_free = true;
  for (auto& r : table.reports) {
    if (!r.divisors.empty()) {
      rep.torsion[r.degree] = r.divisors;
      rep.torsion_free = false;
    }
  }

  rep.equivalence_consistent =
      rep.graph_connected == rep.cup_product_onto &&
      rep.graph_connected == rep.theta_matches_free &&
      rep.graph_connected == rep.theta2_matches;
  return rep;
}

}  // namespace chenlie
