#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chenlie/bigint.hpp"
#include "chenlie/gradedalg.hpp"
#include "chenlie/holonomy.hpp"

namespace chenlie {

// True iff the edges with weight not divisible by p form a connected
// spanning subgraph. A single vertex counts as connected.
bool connected_mod_p(const LinkingGraph& g, std::int64_t p);

struct StrongConnectivity {
  bool ok = false;
  std::int64_t witness_prime = 0;  // a failing prime when !ok
};

// Connectivity modulo every prime. Decided on the finite set of primes
// dividing an edge weight, plus plain connectivity; any other prime leaves
// the graph unchanged.
StrongConnectivity strongly_connected(const LinkingGraph& g);

// Whether the relation lattice of the link presentation projects onto
// Z^{n-1} on the coordinates { y_i ^ y_c } for some choice of distinguished
// component c: the lattice-level form of splitting off a degree-one free
// factor. Decided by Smith form of the projected relation matrix.
bool is_z_generic(const std::vector<std::vector<Int>>& linking_matrix);

/*
 * Condition battery for a link given by its linking matrix:
 *   (a) linking graph connected
 *   (b) relation span has rank n-1 over Q (cup product onto)
 *   (d) theta_k equals the free Chen rank of F_{n-1} for 2 <= k <= kmax
 *   (e) the degree-2 comparison alone
 * together with strong connectivity, Z-genericity, and the torsion found
 * in each degree. (a), (b), (d), (e) are equivalent; a violation on the
 * computed range is an internal-consistency failure, flagged rather than
 * silently reported. Verdicts hold for the computed degrees only.
 */
struct MurasugiReport {
  int n = 0;
  int kmax = 0;
  bool graph_connected = false;              // (a)
  long cup_rank_q = 0;
  bool cup_product_onto = false;             // (b)
  std::vector<long> theta;                   // theta[k-1], k = 1..kmax
  std::vector<long> free_theta;              // theta_k(F_{n-1})
  bool theta_matches_free = false;           // (d)
  bool theta2_matches = false;               // (e)
  StrongConnectivity strong;
  bool z_generic = false;
  std::map<int, std::vector<Int>> torsion;   // degree -> divisors > 1
  bool torsion_free = false;
  bool equivalence_consistent = false;
};

MurasugiReport murasugi_report(const std::vector<std::vector<Int>>& l,
                               int kmax,
                               const BlockLimits& limits = BlockLimits{});

}  // namespace chenlie
