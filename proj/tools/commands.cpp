#include "commands.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "invred/error.hpp"
#include "invred/gfp.hpp"
#include "invred/group.hpp"
#include "invred/invariants.hpp"
#include "invred/io.hpp"
#include "invred/reduction.hpp"
#include "invred/sampling.hpp"

namespace invred::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string spec_path;
  std::string poly_path;
  std::string vector_csv;
  std::uint64_t degree = 0;
  std::optional<std::uint64_t> bound;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::int64_t lambda = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::string output;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

Limits limits_from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("INVRED_SLICE_LIMIT"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0 || raw[0] == '-') {
      throw Error(ErrorCode::Parse, "INVRED_SLICE_LIMIT: expected a positive integer, got '" + std::string(raw) + "'");
    }
    limits.slice_dimension = static_cast<std::size_t>(value);
  }
  return limits;
}

json polynomial_report(const Polynomial& f) {
  return json{{"text", f.to_string()}, {"degree", f.total_degree()}, {"terms", to_json(f)}};
}

json factorization_report(const DegreeFactorization& fac) {
  return json{{"r", fac.r}, {"d", fac.d}, {"p_power", fac.p_power}};
}

json reduction_report(const ReductionResult& red, const Polynomial& input) {
  json c = json::array();
  for (const auto& ci : red.c_list) c.push_back(ci.to_string());
  return json{
      {"input_degree", input.total_degree()},
      {"factorization", factorization_report(red.factorization)},
      {"normalization", red.normalization.residue()},
      {"basis_change", to_json(red.basis_change)},
      {"c", c},
      {"f_tilde", polynomial_report(red.f_tilde)},
      {"verification", {{"invariant", true}, {"homogeneous_degree", red.f_tilde.total_degree()}, {"value_at_point", 1}}},
  };
}

json epsilon_report(const EpsilonResult& eps, const Vector& v, bool fixed) {
  json out{{"vector", to_json(v)}, {"fixed_point", fixed}, {"searched_bound", eps.searched_bound}};
  if (eps.finite()) {
    out["status"] = "found";
    out["epsilon"] = *eps.value;
    out["witness"] = polynomial_report(*eps.witness);
    out["witness_value"] = evaluate(*eps.witness, v).residue();
  } else {
    out["status"] = "none-up-to-bound";
    out["epsilon"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

struct Outcome {
  json result;
  int exit_code = kSuccess;
  std::string alarm;
};

Outcome cmd_basis(const Options& o, std::string& digest_input) {
  digest_input += read_file(o.spec_path);
  if (o.degree < 1) throw Error(ErrorCode::Domain, "--degree must be at least 1");
  const GroupSpec spec = load_group_spec(o.spec_path);
  const DegreeSliceBasis slice = invariant_basis(spec, o.degree, limits_from_environment());
  json basis = json::array();
  for (const auto& f : slice.basis) basis.push_back(polynomial_report(f));
  return {json{{"degree", slice.degree},
               {"slice_dimension", slice_dimension(spec.dimension(), o.degree)},
               {"dimension", slice.dimension()},
               {"basis", basis}}};
}

Outcome cmd_epsilon(const Options& o, std::string& digest_input) {
  digest_input += read_file(o.spec_path);
  const GroupSpec spec = load_group_spec(o.spec_path);
  const Vector v = parse_vector(o.vector_csv, spec.prime(), spec.dimension());
  if (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::Domain, "--vector must be nonzero");
  }
  if (o.bound && *o.bound == 0) throw Error(ErrorCode::Domain, "--bound must be positive");
  const EpsilonResult eps = epsilon(spec, v, o.bound, limits_from_environment());
  return {epsilon_report(eps, v, is_fixed_point(spec, v))};
}

Outcome cmd_reduce(const Options& o, std::string& digest_input) {
  digest_input += read_file(o.spec_path);
  digest_input += read_file(o.poly_path);
  const GroupSpec spec = load_group_spec(o.spec_path);
  const Polynomial f = load_polynomial(o.poly_path, spec.prime(), spec.dimension());
  const Vector v = parse_vector(o.vector_csv, spec.prime(), spec.dimension());
  const ReductionResult red = reduce_degree(spec, f, v);
  json out = reduction_report(red, f);
  out["input"] = polynomial_report(f);
  out["vector"] = to_json(v);
  return {out};
}

Outcome cmd_example(const Options& o) {
  if (o.m < 2) throw Error(ErrorCode::Domain, "--m must be at least 2");
  const Prime p(o.p);
  if (o.lambda < 0 || static_cast<std::uint64_t>(o.lambda) >= o.p) {
    throw Error(ErrorCode::Domain, "--lambda must lie in [0, p)");
  }
  const FieldElement lambda(o.lambda, p);
  const GroupSpec spec = example_action(p, o.m, lambda);
  const Limits limits = limits_from_environment();
  const std::size_t order = enumerate_group(spec, limits.group_cap).order();
  const Vector em = example_point(p, o.m);

  InvariantSlices slices(spec, limits);
  json linear = json::array();
  for (const auto& f : slices.basis(1).basis) linear.push_back(f.to_string());

  const EpsilonResult eps = epsilon(slices, em, order);
  const std::uint64_t expected = std::uint64_t{p.value()} * p.value();

  Outcome outcome;
  outcome.result = json{{"p", p.value()},
                        {"m", o.m},
                        {"lambda", lambda.residue()},
                        {"spec", to_json(spec)},
                        {"group_order", order},
                        {"fixed_point", to_json(em)},
                        {"fixed_point_is_fixed", is_fixed_point(spec, em)},
                        {"degree_one_invariants", linear},
                        {"expected_epsilon", expected}};
  outcome.result["epsilon"] = epsilon_report(eps, em, true);
  if (!eps.finite() || *eps.value != expected) {
    outcome.exit_code = kTheoremViolation;
    outcome.alarm = "epsilon(G, e_m) = " + (eps.finite() ? std::to_string(*eps.value) : std::string("none")) +
                    ", expected " + std::to_string(expected);
    outcome.result["verified"] = false;
    return outcome;
  }
  const ReductionResult red = reduce_degree(spec, *eps.witness, em);
  outcome.result["reduction"] = reduction_report(red, *eps.witness);
  outcome.result["verified"] = true;
  return outcome;
}

Outcome cmd_lucas(const Options& o) {
  const Prime p(o.p);
  const auto factors = lucas_factors(o.a, o.b, p);
  json list = json::array();
  std::string decomposition;
  for (const auto& f : factors) {
    list.push_back(json{{"a_digit", f.top}, {"b_digit", f.bottom}, {"value", f.value}});
    if (!decomposition.empty()) decomposition += '*';
    decomposition += "C(" + std::to_string(f.top) + "," + std::to_string(f.bottom) + ")";
  }
  if (decomposition.empty()) decomposition = "C(0,0)";
  return {json{{"a", o.a},
               {"b", o.b},
               {"p", p.value()},
               {"value", lucas_binomial(o.a, o.b, p).residue()},
               {"factors", list},
               {"decomposition", decomposition}}};
}

Outcome cmd_delta(const Options& o, std::string& digest_input) {
  digest_input += read_file(o.spec_path);
  const GroupSpec spec = load_group_spec(o.spec_path);
  const DeltaResult delta = delta_over_fixed_points(spec, limits_from_environment());
  json out{{"delta", delta.value},
           {"group_order", delta.group_order},
           {"fixed_dimension", delta.fixed_dimension},
           {"points_examined", delta.points_examined}};
  out["maximizer"] = delta.maximizer ? to_json(*delta.maximizer) : json(nullptr);
  return {out};
}

bool is_p_power(std::uint64_t value, std::uint32_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

Outcome cmd_selfcheck(const Options& o) {
  std::mt19937_64 rng(o.seed);
  const SampleOptions options;
  std::uint64_t done = 0;
  std::uint64_t failures = 0;
  std::map<std::uint64_t, std::uint64_t> epsilon_histogram;
  std::map<unsigned, std::uint64_t> r_histogram;
  json failure_log = json::array();
  while (done < o.trials) {
    auto trial = sample_theorem_trial(rng, options);
    if (!trial) continue;
    ++done;
    ++epsilon_histogram[trial->epsilon];
    ++r_histogram[trial->factorization.r];
    std::string problem;
    if (!is_p_power(trial->epsilon, trial->spec.prime().value())) problem = "epsilon is not a power of p";
    try {
      const ReductionResult red = reduce_degree(trial->spec, trial->invariant, trial->point);
      if (red.f_tilde.total_degree() != trial->factorization.p_power) problem = "wrong reduced degree";
    } catch (const Error& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++failures;
      failure_log.push_back(json{{"spec", to_json(trial->spec)},
                                 {"point", to_json(trial->point)},
                                 {"invariant", trial->invariant.to_string()},
                                 {"problem", problem}});
    }
  }
  json eps_hist = json::object();
  for (auto [k, v] : epsilon_histogram) eps_hist[std::to_string(k)] = v;
  json r_hist = json::object();
  for (auto [k, v] : r_histogram) r_hist[std::to_string(k)] = v;
  Outcome outcome{json{{"seed", o.seed},
                       {"trials", done},
                       {"failures", failures},
                       {"epsilon_histogram", eps_hist},
                       {"r_histogram", r_hist},
                       {"failure_log", failure_log}}};
  if (failures != 0) {
    outcome.exit_code = kTheoremViolation;
    outcome.alarm = std::to_string(failures) + " of " + std::to_string(done) + " trials failed";
  }
  return outcome;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalConsistency: return kTheoremViolation;
    case ErrorCode::GroupTooLarge:
    case ErrorCode::Resource: return kResourceLimit;
    default: return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact invariants of finite matrix groups over GF(p) and p-power degree reduction", "invred"};
  app.require_subcommand(1);
  app.add_option("--output", o.output, "Write the report to PATH instead of stdout");
  app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");

  auto* basis = app.add_subcommand("basis", "Basis of the degree-N invariants");
  basis->add_option("--spec", o.spec_path, "Group spec (JSON)")->required();
  basis->add_option("--degree", o.degree, "Degree N")->required();

  auto* eps = app.add_subcommand("epsilon", "Least degree of an invariant nonzero at a point");
  eps->add_option("--spec", o.spec_path, "Group spec (JSON)")->required();
  eps->add_option("--vector", o.vector_csv, "Point as comma-separated residues")->required();
  eps->add_option("--bound", o.bound, "Search degrees 1..N (default: group order)");

  auto* reduce = app.add_subcommand("reduce", "Reduce a separating invariant of degree p^r d to degree p^r");
  reduce->add_option("--spec", o.spec_path, "Group spec (JSON)")->required();
  reduce->add_option("--poly", o.poly_path, "Invariant (JSON term list)")->required();
  reduce->add_option("--vector", o.vector_csv, "Fixed point as comma-separated residues")->required();

  auto* example = app.add_subcommand("example", "Z_p x Z_p example: epsilon at e_m and its reduction");
  example->add_option("--p", o.p, "Prime")->required();
  example->add_option("--m", o.m, "Block size (>= 2)")->required();
  example->add_option("--lambda", o.lambda, "Jordan block eigenvalue in [0, p)")->required();

  auto* lucas = app.add_subcommand("lucas", "C(a, b) mod p with its digit-wise factors");
  lucas->add_option("--a", o.a, "Top argument")->required();
  lucas->add_option("--b", o.b, "Bottom argument")->required();
  lucas->add_option("--p", o.p, "Prime")->required();

  auto* delta = app.add_subcommand("delta", "Maximum of epsilon over nonzero fixed points");
  delta->add_option("--spec", o.spec_path, "Group spec (JSON)")->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomised reduction and p-power trials");
  selfcheck->add_option("--seed", o.seed, "RNG seed");
  selfcheck->add_option("--trials", o.trials, "Number of trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "invred: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  json arguments = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_single_name() == "help") continue;
    arguments[opt->get_single_name()] = opt->as<std::string>();
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string digest_input = name + "\n" + arguments.dump() + "\n";
  try {
    if (name == "basis") outcome = cmd_basis(o, digest_input);
    else if (name == "epsilon") outcome = cmd_epsilon(o, digest_input);
    else if (name == "reduce") outcome = cmd_reduce(o, digest_input);
    else if (name == "example") outcome = cmd_example(o);
    else if (name == "lucas") outcome = cmd_lucas(o);
    else if (name == "delta") outcome = cmd_delta(o, digest_input);
    else outcome = cmd_selfcheck(o);
  } catch (const Error& e) {
    err << "invred: error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "invred: error [resource]: out of memory\n";
    return kResourceLimit;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  json report{{"command", name},
              {"arguments", arguments},
              {"inputs_sha256", sha256_hex(digest_input)},
              {"result", outcome.result}};
  if (o.timing) report["timing_ms"] = elapsed.count();

  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "invred: error [parse]: cannot write " << o.output << "\n";
      return kInputError;
    }
    file << text;
  }
  if (outcome.exit_code == kTheoremViolation) err << "invred: THEOREM VIOLATION: " << outcome.alarm << "\n";
  return outcome.exit_code;
}

}  // namespace invred::cli
