#include "chenlie/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chenlie/closedforms.hpp"
#include "chenlie/errors.hpp"
#include "chenlie/gradedalg.hpp"
#include "chenlie/liecore.hpp"
#include "chenlie/linkcheck.hpp"

namespace chenlie {

namespace {

using Json = nlohmann::ordered_json;

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InvalidInputError("expected an integer, got: " + j.dump());
}

std::vector<std::vector<Int>> json_to_int_matrix(const Json& j,
                                                 const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(std::string(what) + " must be a nonempty array");
  std::vector<std::vector<Int>> out;
  for (auto& row : j) {
    if (!row.is_array())
      throw InvalidInputError(std::string(what) + " rows must be arrays");
    std::vector<Int> r;
    for (auto& x : row) r.push_back(json_to_int(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

InputSpec parse_input_text(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("input is not valid JSON: ") +
                            e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInputError("input must be an object with a \"kind\" string");
  const std::string kind = j["kind"].get<std::string>();
  InputSpec in;
  if (kind == "group") {
    in.kind = InputKind::group;
    if (!j.contains("generators") || !j["generators"].is_number_integer())
      throw InvalidInputError("group input needs integer \"generators\"");
    const long n = j["generators"].get<long>();
    if (n < 1 || n > 64)
      throw InvalidInputError("generator count out of range");
    in.group.n = static_cast<int>(n);
    if (!j.contains("relators") || !j["relators"].is_array())
      throw InvalidInputError("group input needs a \"relators\" array");
    for (auto& r : j["relators"]) {
      if (!r.is_string())
        throw InvalidInputError("relators must be strings");
      in.group.relators.push_back(
          parse_word(r.get<std::string>(), in.group.n));
    }
  } else if (kind == "link") {
    in.kind = InputKind::link;
    if (!j.contains("linking_matrix"))
      throw InvalidInputError("link input needs \"linking_matrix\"");
    in.linking = json_to_int_matrix(j["linking_matrix"], "linking_matrix");
    LinkingGraph::from_matrix(in.linking);  // validates
  } else if (kind == "arrangement") {
    in.kind = InputKind::arrangement;
    if (!j.contains("normals"))
      throw InvalidInputError("arrangement input needs \"normals\"");
    in.normals = json_to_int_matrix(j["normals"], "normals");
  } else if (kind == "quadratic") {
    in.kind = InputKind::quadratic;
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw InvalidInputError("quadratic input needs integer \"n\"");
    const long n = j["n"].get<long>();
    if (n < 1 || n > 64) throw InvalidInputError("n out of range");
    in.quadratic.n = static_cast<int>(n);
    const WedgePairs wp{in.quadratic.n};
    if (!j.contains("relations") || !j["relations"].is_array())
      throw InvalidInputError("quadratic input needs a \"relations\" array");
    for (auto& rel : j["relations"]) {
      if (!rel.is_object())
        throw InvalidInputError(
            "relations must be objects with \"i,j\" keys");
      std::vector<Int> v(wp.dim(), Int(0));
      for (auto& [key, val] : rel.items()) {
        int i = 0, jj = 0;
        char comma = 0;
        std::istringstream ks(key);
        if (!(ks >> i >> comma >> jj) || comma != ',' || !ks.eof() ||
            !(1 <= i && i < jj && jj <= in.quadratic.n))
          throw InvalidInputError("bad wedge key \"" + key +
                                  "\"; expected \"i,j\" with i < j <= n");
        v[wp.index(i, jj)] = json_to_int(val);
      }
      in.quadratic.relations.push_back(std::move(v));
    }
  } else {
    throw InvalidInputError("unknown input kind \"" + kind + "\"");
  }
  return in;
}

InputSpec parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInputError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str());
}

QuadraticPresentation to_quadratic(const InputSpec& in) {
  switch (in.kind) {
    case InputKind::group:
      return from_group(in.group);
    case InputKind::link:
      return from_link(in.linking);
    case InputKind::arrangement:
      return from_arrangement(rank2_flats(in.normals));
    case InputKind::quadratic:
      in.quadratic.validate();
      return in.quadratic;
  }
  throw Error("unreachable");
}

std::vector<std::int64_t> default_primes(const QuadraticPresentation& q) {
  std::set<std::int64_t> ps{2, 3, 5};
  for (auto& r : q.relations)
    for (auto& c : r)
      if (c != 0)
        for (auto p : prime_factors(c)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

namespace {

Json divisors_json(const std::vector<Int>& divs) {
  Json a = Json::array();
  for (auto& d : divs) a.push_back(d.str());
  return a;
}

Json report_json(const DegreeReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["rank_q"] = r.free_rank;
  Json fp = Json::object();
  for (auto& [p, v] : r.rank_fp) fp[std::to_string(p)] = v;
  j["rank_fp"] = fp;
  j["divisors"] = divisors_json(r.divisors);
  return j;
}

Json chen_json(const ChenTable& t, int i) {
  Json j;
  j["n"] = t.n;
  j["kmax"] = t.kmax;
  j["i"] = i;
  j["theta"] = t.theta;
  Json reports = Json::array();
  for (auto& r : t.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  j["flags"] = Json{{"interpretation", "requires 1-formality"}};
  return j;
}

Json derived_json(const DerivedQuotientReport& rep,
                  const std::vector<std::int64_t>& primes) {
  Json j;
  j["n"] = rep.n;
  j["kmax"] = rep.kmax;
  j["i"] = rep.i;
  std::vector<long> theta;
  for (auto& r : rep.reports) theta.push_back(r.rank);
  j["theta"] = theta;
  Json reports = Json::array();
  for (auto& r : rep.reports) {
    if (r.degree < 2) continue;
    Json e;
    e["degree"] = r.degree;
    e["rank_q"] = r.rank;
    Json fp = Json::object();
    for (auto p : primes) {
      long cnt = 0;
      for (auto& d : r.divisors)
        if (d % p == 0) ++cnt;
      fp[std::to_string(p)] = r.rank + cnt;
    }
    e["rank_fp"] = fp;
    e["divisors"] = divisors_json(r.divisors);
    reports.push_back(e);
  }
  j["reports"] = reports;
  if (!rep.note.empty()) j["note"] = rep.note;
  j["flags"] = Json{{"interpretation", "requires 1-formality"}};
  return j;
}

Json murasugi_json(const MurasugiReport& r) {
  Json j;
  j["n"] = r.n;
  j["kmax"] = r.kmax;
  j["graph_connected"] = r.graph_connected;
  j["cup_rank_q"] = r.cup_rank_q;
  j["cup_product_onto"] = r.cup_product_onto;
  j["theta"] = r.theta;
  j["free_theta"] = r.free_theta;
  j["theta_matches_free"] = r.theta_matches_free;
  j["theta2_matches"] = r.theta2_matches;
  j["strongly_connected"] = r.strong.ok;
  if (!r.strong.ok && r.strong.witness_prime != 0)
    j["witness_prime"] = r.strong.witness_prime;
  j["z_generic"] = r.z_generic;
  Json tor = Json::object();
  for (auto& [deg, divs] : r.torsion)
    tor[std::to_string(deg)] = divisors_json(divs);
  j["torsion"] = tor;
  j["torsion_free"] = r.torsion_free;
  j["equivalence_consistent"] = r.equivalence_consistent;
  j["verified_to_degree"] = r.kmax;
  return j;
}

std::vector<std::int64_t> parse_primes(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

std::vector<Int> parse_poly(const std::string& csv) {
  std::vector<Int> out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw InvalidInputError("empty polynomial coefficient");
    out.emplace_back(tok.substr(a, b - a + 1));
  }
  if (out.empty()) throw InvalidInputError("empty polynomial");
  return out;
}

Json series_json(const SeriesTable& s) {
  Json j;
  j["label"] = s.label;
  Json c = Json::array();
  for (auto& x : s.c) c.push_back(x.str());
  j["coefficients"] = c;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_checked(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact Chen Lie algebra computations for groups, links, and "
               "hyperplane arrangements"};
  app.require_subcommand(1);

  std::string input_path;
  int kmax = 8;
  int derived_i = 2;
  std::string primes_csv;
  std::string family;
  int family_n = 2;
  std::string poly_csv;

  auto* chen = app.add_subcommand("chen", "Chen table of an input file");
  chen->add_option("--input", input_path, "input JSON file")->required();
  chen->add_option("--kmax", kmax, "top degree (default 8)");
  chen->add_option("--primes", primes_csv, "comma-separated primes");
  chen->add_option("--i", derived_i, "derived series level (default 2)");

  auto* formula = app.add_subcommand("formula", "closed-form series");
  formula->add_option("--family", family,
                      "free | one-relator | pure-braid | surface-lcs")
      ->required();
  formula->add_option("--n", family_n, "family parameter")->required();
  formula->add_option("--kmax", kmax, "top degree (default 8)");

  auto* lcs = app.add_subcommand("lcs-invert",
                                 "graded exponents of a product formula");
  lcs->add_option("--poly", poly_csv, "coefficients, e.g. \"1,-4,1\"")
      ->required();
  lcs->add_option("--kmax", kmax, "top degree (default 8)");

  auto* mur = app.add_subcommand("murasugi", "link condition battery");
  mur->add_option("--input", input_path, "link JSON file")->required();
  mur->add_option("--kmax", kmax, "top degree (default 8)");

  auto* flats = app.add_subcommand("flats", "rank-2 flats of an arrangement");
  flats->add_option("--input", input_path, "arrangement JSON file")
      ->required();

  auto* oracle = app.add_subcommand(
      "oracle-check", "graded blocks against the Lyndon-basis oracle");
  oracle->add_option("--input", input_path, "input JSON file")->required();
  oracle->add_option("--kmax", kmax, "top degree (default 6)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (chen->parsed()) {
    const InputSpec in = parse_input_file(input_path);
    const QuadraticPresentation q = to_quadratic(in);
    std::vector<std::int64_t> primes =
        primes_csv.empty() ? default_primes(q) : parse_primes(primes_csv);
    if (derived_i < 1) throw InvalidInputError("--i must be >= 1");
    if (derived_i == 2) {
      emit(out, chen_json(chen_table(q, kmax, primes), 2));
    } else {
      emit(out, derived_json(derived_quotient_ranks(q, derived_i, kmax),
                             primes));
    }
  } else if (formula->parsed()) {
    SeriesTable s;
    if (family == "free") {
      s.label = "free-chen";
      for (int k = 1; k <= kmax; ++k) s.c.push_back(free_chen_rank(family_n, k));
    } else if (family == "one-relator") {
      s = one_relator_series(family_n, kmax);
    } else if (family == "pure-braid") {
      s = pure_braid_series(family_n, kmax);
    } else if (family == "surface-lcs") {
      s = invert_lcs_product(surface_lcs_poly(family_n), kmax);
      s.label = "surface-lcs";
    } else {
      throw InvalidInputError("unknown family \"" + family + "\"");
    }
    Json j = series_json(s);
    j["n"] = family_n;
    j["kmax"] = kmax;
    emit(out, j);
  } else if (lcs->parsed()) {
    const std::vector<Int> poly = parse_poly(poly_csv);
    const SeriesTable s = invert_lcs_product(poly, kmax);
    Json j;
    Json pc = Json::array();
    for (auto& x : poly) pc.push_back(x.str());
    j["poly"] = pc;
    j["kmax"] = kmax;
    Json phi = Json::array();
    for (auto& x : s.c) phi.push_back(x.str());
    j["phi"] = phi;
    emit(out, j);
  } else if (mur->parsed()) {
    const InputSpec in = parse_input_file(input_path);
    if (in.kind != InputKind::link)
      throw InvalidInputError("murasugi requires a link input");
    emit(out, murasugi_json(murasugi_report(in.linking, kmax)));
  } else if (flats->parsed()) {
    const InputSpec in = parse_input_file(input_path);
    if (in.kind != InputKind::arrangement)
      throw InvalidInputError("flats requires an arrangement input");
    const MatroidLines lines = rank2_flats(in.normals);
    Json j;
    j["n"] = lines.n;
    j["lines"] = lines.lines;
    emit(out, j);
  } else if (oracle->parsed()) {
    if (!oracle->count("--kmax")) kmax = 6;
    const InputSpec in = parse_input_file(input_path);
    const QuadraticPresentation q = to_quadratic(in);
    Json degrees = Json::array();
    bool all_match = true;
    for (int d = 2; d <= kmax; ++d) {
      const DegreeReport rep = degree_report(q, d, {}, true);
      const auto [orank, odivs] = oracle_infinitesimal_alexander(q, d);
      const bool match = rep.free_rank == orank && rep.divisors == odivs;
      all_match = all_match && match;
      Json e;
      e["degree"] = d;
      e["graded"] = Json{{"rank", rep.free_rank},
                         {"divisors", divisors_json(rep.divisors)}};
      e["oracle"] =
          Json{{"rank", orank}, {"divisors", divisors_json(odivs)}};
      e["match"] = match;
      degrees.push_back(e);
    }
    Json j;
    j["degrees"] = degrees;
    j["match"] = all_match;
    emit(out, j);
    if (!all_match) {
      err << "error: graded presentation disagrees with the oracle\n";
      return 4;
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_checked(args, out, err);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chenlie
