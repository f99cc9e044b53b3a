#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chenlie/bigint.hpp"
#include "chenlie/holonomy.hpp"
#include "chenlie/words.hpp"

namespace chenlie {

enum class InputKind { group, link, arrangement, quadratic };

/*
 * Input file schemas (JSON):
 *   group:       {"kind":"group","generators":N,"relators":["[x1,x2]",...]}
 *   link:        {"kind":"link","linking_matrix":[[0,1],[1,0]]}
 *   arrangement: {"kind":"arrangement","normals":[[1,-1,0],[1,0,-1],...]}
 *   quadratic:   {"kind":"quadratic","n":N,"relations":[{"1,2":1,"3,4":1}]}
 * with relation keys "i,j", i < j, 1-based.
 */
struct InputSpec {
  InputKind kind = InputKind::group;
  GroupPresentation group;                 // kind == group
  std::vector<std::vector<Int>> linking;   // kind == link
  std::vector<std::vector<Int>> normals;   // kind == arrangement
  QuadraticPresentation quadratic;         // kind == quadratic
};

InputSpec parse_input_text(const std::string& json_text);
InputSpec parse_input_file(const std::string& path);

// The holonomy presentation of any input kind.
QuadraticPresentation to_quadratic(const InputSpec& in);

// {2, 3, 5} plus every prime dividing a relation coefficient.
std::vector<std::int64_t> default_primes(const QuadraticPresentation& q);

// Exit codes: 0 ok, 2 input or schema error, 3 resource cap, 4 oracle
// mismatch. Reports are printed to out as JSON with fixed key order;
// identical inputs produce byte-identical output. Errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chenlie
