// Command-line driver: runs the Grover, Deutsch-Jozsa and order-finding
// experiments and writes their coherence traces as CSV or JSON.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiment.hpp"
#include "qcoh/deutsch_jozsa.hpp"
#include "qcoh/errors.hpp"
#include "qcoh/grover.hpp"
#include "qcoh/order_finding.hpp"

namespace {

using namespace qcoh;
using cli::Cell;
using cli::ExperimentOutput;
using json = nlohmann::ordered_json;

constexpr int exit_usage = 2;
constexpr int exit_capacity = 3;

struct OutputOptions {
  std::string out;
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOptions& o, std::string default_format) {
  o.format = std::move(default_format);
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void emit(const ExperimentOutput& result, const OutputOptions& o) {
  std::ostringstream buf;
  if (o.format == "json") {
    result.write_json(buf);
  } else {
    result.write_csv(buf);
  }
  if (o.out.empty()) {
    std::cout << buf.str();
    return;
  }
  std::filesystem::path path(o.out);
  if (const char* dir = std::getenv("QCOH_OUTPUT_DIR"); dir && path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file " + path.string());
  file << buf.str();
}

// ---------------------------------------------------------------- grover

struct GroverOptions {
  int qubits = 0;
  std::uint64_t solutions = 1;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
  OutputOptions output;
};

int first_success_peak(const std::vector<grover::GroverTraceRow>& rows) {
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    if (rows[i].p_success >= rows[i - 1].p_success && rows[i].p_success > rows[i + 1].p_success) {
      return rows[i].k;
    }
  }
  return -1;
}

void run_grover(const GroverOptions& o) {
  grover::GroverConfig config =
      o.seed ? grover::GroverConfig::random_indices(o.qubits, o.solutions, *o.seed)
             : grover::GroverConfig::first_indices(o.qubits, o.solutions);
  config.k_max = o.iterations ? *o.iterations : grover::default_k_max(o.qubits, o.solutions);
  const auto rows = grover::run_trace(config);

  ExperimentOutput result;
  result.metadata = cli::base_metadata("grover");
  result.metadata["qubits"] = o.qubits;
  result.metadata["solutions"] = o.solutions;
  result.metadata["placement"] = o.seed ? "random" : "first";
  result.metadata["seed"] = o.seed ? json(*o.seed) : json(nullptr);
  result.metadata["k_max"] = *config.k_max;
  result.metadata["k_star_formula"] = grover::optimal_iterations(o.qubits, o.solutions);
  result.metadata["k_argmax_simulated"] = first_success_peak(rows);
  result.columns = {"k", "c_r_closed", "c_l1_closed", "c_r_sim", "c_l1_sim", "p_success", "c_l1_log"};
  for (const auto& r : rows) {
    result.add_row({std::int64_t{r.k}, r.c_r_closed, r.c_l1_closed, r.c_r_sim, r.c_l1_sim,
                    r.p_success, std::log2(r.c_l1_closed + 1.0)});
  }
  result.extra["solution_indices"] = config.solutions;
  emit(result, o.output);
}

// -------------------------------------------------------- min-coherence

struct MinOptions {
  int qubits = 0;
  std::string solutions_list;
  bool parallel = false;
  OutputOptions output;
};

std::vector<std::uint64_t> parse_solution_list(const std::string& text) {
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("invalid solution count '" + item + "' in --solutions-list");
    }
    const std::uint64_t m = std::stoull(item);
    if (!seen.insert(m).second) {
      std::cerr << "warning: duplicate solution count " << m << " ignored\n";
      continue;
    }
    values.push_back(m);
  }
  if (values.empty()) throw ValidationError("--solutions-list is empty");
  std::sort(values.begin(), values.end());
  return values;
}

void run_min_coherence(const MinOptions& o) {
  const auto ms = parse_solution_list(o.solutions_list);
  const auto minima = grover::min_coherence_vs_m(o.qubits, ms, o.parallel);

  ExperimentOutput result;
  result.metadata = cli::base_metadata("grover-min-coherence");
  result.metadata["qubits"] = o.qubits;
  result.metadata["solutions_list"] = ms;
  result.columns = {"M", "log2M", "min_c_r", "min_c_l1"};
  for (const auto& m : minima) {
    result.add_row({static_cast<std::int64_t>(m.m), std::log2(static_cast<double>(m.m)),
                    m.min_c_r, m.min_c_l1});
  }
  emit(result, o.output);
}

// -------------------------------------------------------------------- dj

struct DjOptions {
  int qubits = 0;
  std::string function;
  OutputOptions output;
};

dj::DjFunction parse_dj_function(int n, const std::string& choice) {
  if (choice == "constant:0" || choice == "constant:1") {
    return dj::DjFunction::constant(n, choice.back() == '1');
  }
  const std::string prefix = "balanced:";
  if (choice.rfind(prefix, 0) != 0) {
    throw ValidationError("--function must be constant:0, constant:1, balanced:<bits> or enumerate");
  }
  const std::string bits = choice.substr(prefix.size());
  if (n < 1 || n > max_qubits) {
    throw CapacityError("qubit count " + std::to_string(n) + " outside supported range");
  }
  const std::size_t expected = std::size_t{1} << n;
  if (bits.size() != expected) {
    throw ValidationError("bit-string has length " + std::to_string(bits.size()) +
                          " but --qubits " + std::to_string(n) + " needs " +
                          std::to_string(expected));
  }
  dj::DjFunction f = dj::DjFunction::parse(bits);
  if (f.kind() != dj::FunctionKind::balanced) {
    const auto ones = std::count(bits.begin(), bits.end(), '1');
    throw ValidationError("bit-string is not balanced: " + std::to_string(ones) + " ones out of " +
                          std::to_string(expected));
  }
  return f;
}

void run_dj_enumerate(const DjOptions& o) {
  const dj::BalancedExtremes ex = dj::balanced_coherence_extremes(o.qubits);
  ExperimentOutput result;
  result.metadata = cli::base_metadata("deutsch-jozsa");
  result.metadata["qubits"] = o.qubits;
  result.metadata["function"] = "enumerate";
  result.columns = {"table", "verdict", "p_zero", "c_r_final", "c_l1_final"};
  for (const dj::DjFunction& f : dj::all_balanced(o.qubits)) {
    const dj::DjResult r = dj::run_dj(f);
    result.add_row({f.to_bits(), std::string(dj::to_string(r.verdict)), r.p_zero,
                    r.trace[2].c_r, r.trace[2].c_l1});
  }
  result.extra["tables"] = ex.tables;
  result.extra["max_c_r"] = ex.max_c_r;
  result.extra["max_c_l1"] = ex.max_c_l1;
  result.extra["max_c_r_tables"] = ex.max_c_r_tables;
  result.extra["max_c_l1_tables"] = ex.max_c_l1_tables;
  result.extra["max_p_zero"] = ex.max_p_zero;
  result.extra["range_c_r"] = ex.range_c_r();
  result.extra["range_c_l1"] = ex.range_c_l1();
  result.extra["c_r_within_range"] = ex.c_r_within_range();
  result.extra["c_l1_within_range"] = ex.c_l1_within_range();
  emit(result, o.output);
}

void run_dj(const DjOptions& o) {
  if (o.function == "enumerate") {
    run_dj_enumerate(o);
    return;
  }
  const dj::DjFunction f = parse_dj_function(o.qubits, o.function);
  const dj::DjResult r = dj::run_dj(f);

  ExperimentOutput result;
  result.metadata = cli::base_metadata("deutsch-jozsa");
  result.metadata["qubits"] = o.qubits;
  result.metadata["function"] = o.function;
  result.columns = {"stage", "c_r", "c_l1"};
  for (std::size_t s = 0; s < r.trace.size(); ++s) {
    result.add_row({static_cast<std::int64_t>(s), r.trace[s].c_r, r.trace[s].c_l1});
  }
  result.extra["kind"] = dj::to_string(f.kind());
  result.extra["verdict"] = dj::to_string(r.verdict);
  result.extra["p_zero"] = r.p_zero;
  emit(result, o.output);
}

// ------------------------------------------------------------------- qof

struct QofOptions {
  std::optional<std::uint64_t> base;
  std::optional<std::uint64_t> modulus;
  std::optional<double> epsilon;
  std::optional<int> t;
  std::uint64_t seed = 1;
  int samples = 10;
  std::optional<std::uint64_t> factor;
  int budget = 20;
  OutputOptions output;
};

json transcript_json(const qof::ContinuedFractionResult& cf) {
  json conv = json::array();
  for (const auto& c : cf.convergents) conv.push_back({c.num, c.den});
  return json{{"j", cf.measured_j},
              {"partial_quotients", cf.partial_quotients},
              {"convergents", conv},
              {"candidate_r", cf.candidate_r ? json(*cf.candidate_r) : json(nullptr)}};
}

void run_factor(const QofOptions& o) {
  const double eps = o.epsilon.value_or(qof::default_epsilon);
  const qof::FactorResult f = qof::shor_factor(*o.factor, o.seed, o.budget, o.samples, eps);

  ExperimentOutput result;
  result.metadata = cli::base_metadata("shor");
  result.metadata["modulus"] = *o.factor;
  result.metadata["epsilon"] = eps;
  result.metadata["seed"] = o.seed;
  result.metadata["budget"] = o.budget;
  result.metadata["samples"] = o.samples;
  result.columns = {"attempt", "base", "order", "outcome"};
  for (std::size_t i = 0; i < f.attempts.size(); ++i) {
    const auto& a = f.attempts[i];
    result.add_row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(a.base),
                    a.order ? Cell{static_cast<std::int64_t>(*a.order)} : Cell{std::string()},
                    std::string(a.outcome)});
  }
  result.extra["method"] = qof::to_string(f.method);
  result.extra["factors"] =
      f.factors ? json::array({f.factors->first, f.factors->second}) : json(nullptr);
  emit(result, o.output);
  if (!f.factors) throw Error("no factor found within the attempt budget");
}

void run_qof(const QofOptions& o) {
  if (o.factor) {
    run_factor(o);
    return;
  }
  if (!o.base || !o.modulus) throw ValidationError("--base and --modulus are required (or --factor N)");
  if (o.t && o.epsilon) throw ValidationError("--t and --epsilon are mutually exclusive");
  const qof::QofConfig config =
      o.t ? qof::QofConfig::with_first_qubits(*o.base, *o.modulus, *o.t)
          : qof::QofConfig::with_epsilon(*o.base, *o.modulus, o.epsilon.value_or(qof::default_epsilon));
  const qof::QofRun run = qof::run_qof(config);
  std::mt19937_64 rng(o.seed);
  const qof::OrderRecovery rec = qof::recover_order(config, run.outcome_distribution, o.samples, rng);

  ExperimentOutput result;
  result.metadata = cli::base_metadata("order-finding");
  result.metadata["base"] = config.base;
  result.metadata["modulus"] = config.modulus;
  result.metadata["epsilon"] = o.t ? json(nullptr) : json(config.epsilon);
  result.metadata["t"] = config.first_qubits;
  result.metadata["L"] = config.second_qubits;
  result.metadata["seed"] = o.seed;
  result.metadata["samples"] = o.samples;
  result.columns = {"stage", "c_r", "c_l1"};
  for (std::size_t s = 0; s < run.trace.size(); ++s) {
    result.add_row({static_cast<std::int64_t>(s), run.trace[s].c_r, run.trace[s].c_l1});
  }
  json histogram = json::array();
  for (std::size_t j = 0; j < run.outcome_distribution.size(); ++j) {
    if (run.outcome_distribution[j] > 1e-12) histogram.push_back({{"j", j}, {"p", run.outcome_distribution[j]}});
  }
  json transcripts = json::array();
  for (const auto& cf : rec.transcripts) transcripts.push_back(transcript_json(cf));
  result.extra["histogram"] = std::move(histogram);
  result.extra["transcripts"] = std::move(transcripts);
  result.extra["order"] = rec.order ? json(*rec.order) : json(nullptr);
  result.extra["attempts"] = rec.attempts;
  result.extra["classical_order"] = qof::classical_order(config.base, config.modulus);
  emit(result, o.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence traces of Grover, Deutsch-Jozsa and order-finding simulations"};
  app.set_version_flag("--version", std::string(cli::tool_version));
  app.require_subcommand(1);

  GroverOptions grover_opts;
  auto* grover_cmd = app.add_subcommand("grover", "Per-iteration coherence trace of Grover search");
  grover_cmd->add_option("--qubits", grover_opts.qubits, "Number of qubits n")->required();
  grover_cmd->add_option("--solutions", grover_opts.solutions, "Number of marked items M")->capture_default_str();
  grover_cmd->add_option("--iterations", grover_opts.iterations, "Last iteration k_max (default 2k*+5)");
  grover_cmd->add_option("--seed", grover_opts.seed, "Place marked items at random using this seed");
  add_output_flags(grover_cmd, grover_opts.output, "csv");

  MinOptions min_opts;
  auto* min_cmd = app.add_subcommand("min-coherence", "Minimal Grover coherence for each M");
  min_cmd->add_option("--qubits", min_opts.qubits, "Number of qubits n")->required();
  min_cmd->add_option("--solutions-list", min_opts.solutions_list, "Comma-separated M values")->required();
  min_cmd->add_flag("--parallel", min_opts.parallel, "Run the M values concurrently");
  add_output_flags(min_cmd, min_opts.output, "csv");

  DjOptions dj_opts;
  auto* dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa run with coherence at each stage");
  dj_cmd->add_option("--qubits", dj_opts.qubits, "Number of qubits n")->required();
  dj_cmd->add_option("--function", dj_opts.function,
                     "constant:0 | constant:1 | balanced:<bits> | enumerate")->required();
  add_output_flags(dj_cmd, dj_opts.output, "json");

  QofOptions qof_opts;
  auto* qof_cmd = app.add_subcommand("qof", "Quantum order finding and Shor factoring");
  qof_cmd->add_option("--base", qof_opts.base, "Base x");
  qof_cmd->add_option("--modulus", qof_opts.modulus, "Modulus N");
  qof_cmd->add_option("--epsilon", qof_opts.epsilon, "Error tolerance (sets t)");
  qof_cmd->add_option("--t", qof_opts.t, "First-register qubits (overrides epsilon)");
  qof_cmd->add_option("--seed", qof_opts.seed, "Sampling seed")->capture_default_str();
  qof_cmd->add_option("--samples", qof_opts.samples, "Measurement samples per order search")->capture_default_str();
  qof_cmd->add_option("--factor", qof_opts.factor, "Factor N end to end");
  qof_cmd->add_option("--budget", qof_opts.budget, "Base choices tried when factoring")->capture_default_str();
  add_output_flags(qof_cmd, qof_opts.output, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*grover_cmd) run_grover(grover_opts);
    else if (*min_cmd) run_min_coherence(min_opts);
    else if (*dj_cmd) run_dj(dj_opts);
    else if (*qof_cmd) run_qof(qof_opts);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_capacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
