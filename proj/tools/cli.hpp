#pragma once

// `mcl` command-line frontend. Kept in a header so the test suite can drive
// it in-process.
//
// Exit codes:
//   0 success
//   1 unexpected internal error
//   2 parse/usage error
//   3 invalid pair (loop, coloop or parallel where not allowed)
//   4 degenerate pair (alpha undefined)
//   5 no eligible pair
//   6 verification failure
//   7 enumeration limit exceeded
//   8 other invalid input (bad rank, non-prime modulus, ...)

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcl/mcl.hpp"
#include "mcl/verification.hpp"

namespace mcl::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitInvalidPair = 3,
  kExitDegeneratePair = 4,
  kExitNoEligiblePair = 5,
  kExitVerificationFailed = 6,
  kExitEnumerationLimit = 7,
  kExitInvalidInput = 8,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return kExitParse;
    case ErrorCode::kInvalidPair:
    case ErrorCode::kLoopElement: return kExitInvalidPair;
    case ErrorCode::kDegeneratePair: return kExitDegeneratePair;
    case ErrorCode::kNoEligiblePair: return kExitNoEligiblePair;
    case ErrorCode::kEnumerationLimit: return kExitEnumerationLimit;
    default: return kExitInvalidInput;
  }
}

struct InputFlags {
  std::string construct;
  std::optional<int> rank;
  std::optional<int> prime;
  std::optional<int> elements;
  std::string matrix_path;
  std::string graph_path;
  std::string circuits_path;
  std::vector<int> pair;
  std::uint64_t seed = 0;
  int target = 0;
};

struct CommonFlags {
  bool json = false;
  int threads = 1;
  std::uint64_t enum_limit = 10'000'000;
};

struct LoadedInput {
  Matroid matroid;
  Json descriptor;
  std::optional<ElementPair> default_pair;
};

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) fail(ErrorCode::kParseError, std::string("missing ") + flag);
  return *v;
}

inline LoadedInput load_input(const InputFlags& f) {
  const int sources = (!f.construct.empty()) + (!f.matrix_path.empty()) + (!f.graph_path.empty()) +
                      (!f.circuits_path.empty());
  if (sources != 1) {
    fail(ErrorCode::kParseError, "give exactly one of --construct, --matrix, --graph, --circuits");
  }
  if (!f.matrix_path.empty()) {
    FieldMatrix m = load_matrix(f.matrix_path);
    return {linear_matroid(m), Json{{"source", "matrix"}, {"path", f.matrix_path}}, std::nullopt};
  }
  if (!f.graph_path.empty()) {
    Graph g = load_edge_list(f.graph_path);
    return {graphic_matroid(g), Json{{"source", "graph"}, {"path", f.graph_path}}, std::nullopt};
  }
  if (!f.circuits_path.empty()) {
    CircuitListMatroid c = load_circuits(f.circuits_path, f.elements, f.rank);
    return {c.matroid(), Json{{"source", "circuits"}, {"path", f.circuits_path}}, std::nullopt};
  }
  Json d{{"source", "construct"}, {"construction", f.construct}};
  if (f.construct == "m_rp" || f.construct == "m_rp_rational") {
    const int r = require(f.rank, "--rank");
    const int p = require(f.prime, "--prime");
    d["rank"] = r;
    d["prime"] = p;
    if (f.construct == "m_rp") {
      auto conf = build_m_rp(r, p);
      return {linear_matroid(conf.matrix), d, conf.pair};
    }
    auto conf = build_m_rp_rational(r, p);
    d["prime_modulus"] = conf.prime_modulus;
    return {linear_matroid(conf.matrix), d, conf.pair};
  }
  if (f.construct == "uniform") {
    const int r = require(f.rank, "--rank");
    const int n = require(f.elements, "--elements");
    d["rank"] = r;
    d["elements"] = n;
    return {uniform_matroid(r, n), d, std::nullopt};
  }
  if (f.construct == "sparse_paving") {
    const int r = require(f.rank, "--rank");
    const int n = require(f.elements, "--elements");
    auto sample = generate_sparse_paving(n, r, f.target, f.seed);
    d["rank"] = r;
    d["elements"] = n;
    d["target"] = f.target;
    d["seed"] = f.seed;
    d["circuits"] = circuits_to_json(sample.matroid)["circuits"];
    return {sample.matroid.matroid(), d, std::nullopt};
  }
  fail(ErrorCode::kParseError, "unknown construction '" + f.construct + "'");
}

inline std::optional<ElementPair> selected_pair(const InputFlags& f, const LoadedInput& in) {
  if (f.pair.empty()) return in.default_pair;
  return ElementPair{f.pair[0], f.pair[1]};
}

inline Json pair_json(ElementPair p) { return Json::array({p.i, p.j}); }

inline Json counts_json(const BasisCounts& c) {
  return Json{{"b", c.b.str()},           {"b_i", c.b_i.str()},           {"b_j", c.b_j.str()},
              {"b_ij", c.b_ij.str()},     {"b_i_only", c.b_i_only.str()}, {"b_j_only", c.b_j_only.str()},
              {"b_neither", c.b_neither.str()}};
}

inline Json matroid_json(const Matroid& m) {
  return Json{{"elements", m.size()}, {"rank", m.rank()}, {"description", m.describe()}};
}

inline CountOptions count_options(const CommonFlags& c) {
  CountOptions o;
  o.threads = c.threads;
  o.enum_limit = c.enum_limit;
  return o;
}

/// Human-readable rendering: one "key: value" line per scalar, nested
/// objects indented.
inline void print_table(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_table(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << it.key() << ":\n";
      for (const auto& row : v) {
        std::string line;
        for (auto f = row.begin(); f != row.end(); ++f) {
          line += (line.empty() ? "" : "  ") + f.key() + "=" +
                  (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
        }
        out << pad << "  " << line << "\n";
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

inline void emit(std::ostream& out, const CommonFlags& flags, const std::string& command, const Json& input,
                 const Json& result, const EnumerationStats& stats, double millis) {
  if (flags.json) {
    Json env{{"tool", "mcl"},
             {"version", kVersion},
             {"command", command},
             {"input", input},
             {"result", result},
             {"stats", Json{{"subsets_scanned", stats.subsets_scanned}, {"wall_time_ms", millis}}}};
    out << env.dump(2) << "\n";
    return;
  }
  print_table(out, Json{{"input", input}, {"result", result}});
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline int cmd_correlate(const InputFlags& f, const CommonFlags& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  LoadedInput in = load_input(f);
  CountOptions opts = count_options(c);
  EnumerationStats stats;
  Json input = in.descriptor;
  input["matroid"] = matroid_json(in.matroid);
  Json result;
  if (auto pair = selected_pair(f, in)) {
    require_classifiable(in.matroid, *pair);
    CorrelationReport rep = report_from_counts(*pair, count_partition(in.matroid, *pair, opts, &stats));
    result = Json{{"pair", pair_json(rep.pair)},
                  {"counts", counts_json(rep.counts)},
                  {"beta", rep.beta.str()},
                  {"alpha", rep.alpha ? Json(rep.alpha->str()) : Json(nullptr)},
                  {"case", std::string(to_string(rep.label))}};
  } else {
    BasisTable table = basis_table(in.matroid, opts, &stats);
    Extremum beta = beta_max(in.matroid, table);
    result["beta_max"] = Json{{"value", beta.value.str()}, {"pair", pair_json(beta.pair)}};
    try {
      Extremum alpha = alpha_max(in.matroid, table);
      result["alpha_max"] = Json{{"value", alpha.value.str()}, {"pair", pair_json(alpha.pair)}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoEligiblePair) throw;
      result["alpha_max"] = nullptr;
    }
  }
  emit(out, c, "correlate", input, result, stats, elapsed_ms(start));
  return kExitOk;
}

inline int cmd_counts(const InputFlags& f, const CommonFlags& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  LoadedInput in = load_input(f);
  CountOptions opts = count_options(c);
  EnumerationStats stats;
  Json input = in.descriptor;
  input["matroid"] = matroid_json(in.matroid);
  Json result;
  if (auto pair = selected_pair(f, in)) {
    BasisCounts counts = count_partition(in.matroid, *pair, opts, &stats);
    result = Json{{"pair", pair_json(*pair)}, {"counts", counts_json(counts)}};
  } else {
    result = Json{{"bases", count_bases(in.matroid, opts, &stats).str()}};
  }
  emit(out, c, "counts", input, result, stats, elapsed_ms(start));
  return kExitOk;
}

inline int cmd_converge(const InputFlags& f, const CommonFlags& c, int k_max, int brute_check,
                        std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  LoadedInput in = load_input(f);
  auto pair = selected_pair(f, in);
  if (!pair) fail(ErrorCode::kParseError, "--pair is required for this input");
  require_valid_pair(in.matroid, *pair);
  CountOptions opts = count_options(c);
  EnumerationStats stats;
  BasisCounts counts = count_partition(in.matroid, *pair, opts, &stats);
  ConvergenceTrace trace = beta_parallel_sequence(counts, k_max);

  Json input = in.descriptor;
  input["matroid"] = matroid_json(in.matroid);
  Json rows = Json::array();
  for (const auto& [k, beta] : trace.betas) rows.push_back(Json{{"k", k}, {"beta", beta.str()}});
  const Ratio& first = trace.betas.front().second;
  std::string direction = trace.limit > first ? "increasing" : (trace.limit < first ? "decreasing" : "constant");
  Json result{{"pair", pair_json(*pair)},
              {"counts", counts_json(counts)},
              {"trace", rows},
              {"limit", trace.limit.str()},
              {"direction", direction}};

  bool agrees = true;
  if (brute_check > 0) {
    Json checks = Json::array();
    for (int k = 1; k <= std::min(brute_check, k_max); ++k) {
      auto ext = parallel_extend(in.matroid, *pair, k);
      EnumerationStats ext_stats;
      Ratio brute = beta_from_counts(count_partition(ext.matroid, ext.pair, opts, &ext_stats));
      stats.subsets_scanned += ext_stats.subsets_scanned;
      const bool ok = brute == trace.betas[k - 1].second;
      agrees = agrees && ok;
      checks.push_back(Json{{"k", k}, {"elements", ext.matroid.size()}, {"beta", brute.str()}, {"agrees", ok}});
    }
    result["brute_check"] = checks;
  }
  emit(out, c, "converge", input, result, stats, elapsed_ms(start));
  if (!agrees) {
    err << "error: formula and enumeration disagree\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

inline int cmd_sparse_paving(const InputFlags& f, const CommonFlags& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const int n = require(f.elements, "--elements");
  const int r = require(f.rank, "--rank");
  auto sample = generate_sparse_paving(n, r, f.target, f.seed);
  Matroid m = sample.matroid.matroid();
  CountOptions opts = count_options(c);
  EnumerationStats stats;
  BasisTable table = basis_table(m, opts, &stats);
  Json input{{"elements", n}, {"rank", r}, {"target", f.target}, {"seed", f.seed}};
  Json result = circuits_to_json(sample.matroid);
  result["circuit_count"] = sample.matroid.circuits().size();
  result["is_sparse_paving"] = is_sparse_paving(sample.matroid);
  result["bases"] = table.bases().str();
  Extremum beta = beta_max(m, table);
  result["beta_max"] = Json{{"value", beta.value.str()}, {"pair", pair_json(beta.pair)}};
  try {
    Extremum alpha = alpha_max(m, table);
    result["alpha_max"] = Json{{"value", alpha.value.str()}, {"pair", pair_json(alpha.pair)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoEligiblePair) throw;
    result["alpha_max"] = nullptr;
  }
  emit(out, c, "sparse-paving", input, result, stats, elapsed_ms(start));
  return kExitOk;
}

inline int cmd_verify_paper(const CommonFlags& c, std::ostream& out) {
  CountOptions opts = count_options(c);
  bool all_passed = true;
  Json checks = Json::array();
  auto on_result = [&](const CheckResult& r) {
    all_passed = all_passed && r.passed;
    if (c.json) return;
    out << std::left << std::setw(4) << r.id << std::setw(6) << (r.passed ? "PASS" : "FAIL")
        << std::setw(28) << r.key << r.title << "\n"
        << "          expected: " << r.expected << "\n"
        << "          computed: " << r.computed << "\n";
    for (const auto& d : r.details) out << "          ! " << d << "\n";
  };
  const auto start = std::chrono::steady_clock::now();
  auto results = run_verification(opts, on_result);
  for (const auto& r : results) {
    checks.push_back(Json{{"id", r.id},
                          {"key", r.key},
                          {"title", r.title},
                          {"expected", r.expected},
                          {"computed", r.computed},
                          {"passed", r.passed},
                          {"details", r.details}});
  }
  if (c.json) {
    Json env{{"tool", "mcl"},
             {"version", kVersion},
             {"command", "verify-paper"},
             {"result", Json{{"passed", all_passed}, {"checks", checks}, {"excluded", Json::array({10})}}},
             {"stats", Json{{"wall_time_ms", elapsed_ms(start)}}}};
    out << env.dump(2) << "\n";
  } else {
    out << std::left << std::setw(4) << "10" << "EXCLUDED  " << std::setw(24) << "field-supremum"
        << "excluded: the supremum over all matroids is not computable\n";
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

inline int default_threads() {
  if (const char* env = std::getenv("MCL_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--construct", f.construct, "Named construction")
      ->check(CLI::IsMember({"m_rp", "m_rp_rational", "uniform", "sparse_paving"}));
  cmd->add_option("-r,--rank", f.rank, "Rank r");
  cmd->add_option("-p,--prime", f.prime, "Prime p (any integer >= 2 for m_rp_rational)");
  cmd->add_option("-n,--elements", f.elements, "Ground set size n");
  cmd->add_option("--matrix", f.matrix_path, "Matrix file (linear matroid)");
  cmd->add_option("--graph", f.graph_path, "Edge-list file (graphic matroid)");
  cmd->add_option("--circuits", f.circuits_path, "Circuit-list JSON (sparse paving matroid)");
  cmd->add_option("--pair", f.pair, "Distinguished pair I J")->expected(2);
  cmd->add_option("--seed", f.seed, "Seed for sparse_paving");
  cmd->add_option("--target", f.target, "Requested circuit count for sparse_paving");
}

inline void add_common_flags(CLI::App* cmd, CommonFlags& c) {
  cmd->add_flag("--json", c.json, "Emit the JSON envelope");
  cmd->add_option("--threads", c.threads, "Enumeration workers (default $MCL_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enum-limit", c.enum_limit, "Refuse enumerations larger than this many subsets");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact basis-correlation invariants of matroids", "mcl"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  InputFlags input;
  CommonFlags common;
  common.threads = default_threads();
  int k_max = 6;
  int brute_check = 0;

  auto* correlate = app.add_subcommand("correlate", "beta/alpha of a pair, or beta_max/alpha_max");
  add_input_flags(correlate, input);
  add_common_flags(correlate, common);

  auto* counts = app.add_subcommand("counts", "Basis counts, optionally split by a pair");
  add_input_flags(counts, input);
  add_common_flags(counts, common);

  auto* converge = app.add_subcommand("converge", "beta of k-fold parallel extensions, k = 1..K");
  add_input_flags(converge, input);
  add_common_flags(converge, common);
  converge->add_option("--k-max", k_max, "Largest k")->check(CLI::PositiveNumber);
  converge->add_option("--brute-check", brute_check, "Also enumerate extensions for k <= K")
      ->check(CLI::NonNegativeNumber);

  auto* sparse = app.add_subcommand("sparse-paving", "Generate a sparse paving matroid and report it");
  sparse->add_option("-n,--elements", input.elements, "Ground set size")->required();
  sparse->add_option("-r,--rank", input.rank, "Rank")->required();
  sparse->add_option("--target", input.target, "Requested number of circuits");
  sparse->add_option("--seed", input.seed, "Shuffle seed");
  add_common_flags(sparse, common);

  auto* verify = app.add_subcommand("verify-paper", "Run every reproduction check");
  add_common_flags(verify, common);

  try {
    std::vector<std::string> args;
    for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*correlate) return cmd_correlate(input, common, out);
    if (*counts) return cmd_counts(input, common, out);
    if (*converge) return cmd_converge(input, common, k_max, brute_check, out, err);
    if (*sparse) return cmd_sparse_paving(input, common, out);
    if (*verify) return cmd_verify_paper(common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace mcl::cli
