// cyq — analyzer for closed cyclic queueing networks ending at a
// knowledge-base host: operational-law aggregates, responsiveness tables,
// congestion critical points, flow-equivalent decomposition, exact MVA, and
// a discrete-event simulator for cross-checking.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyq/reports.hpp"

namespace {

// Exit codes: 0 ok, 1 usage, 2 parse errors, 3 invalid models or arguments,
// 4 degenerate decomposition.
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitDegenerate = 4;

struct RangeN {
  long from = 1;
  long to = 1;
};

// Accepts "A..B" or a single "N".
RangeN parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long n = std::stol(text);
      return {n, n};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw cyq::InvalidArgument("cannot parse window range \"" + text + "\"");
  }
}

void write_csv(const std::string& path, const std::string& csv) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cyq::InvalidArgument("cannot write CSV file " + path);
  out << csv;
}

struct CommonOptions {
  std::string model;
  std::string models_dir;
  std::string csv_path;
  std::string n_range = "1..15";
  double think = -1;  // < 0: keep the model file's value
  int transactions = 0;  // 0: keep the model file's value
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("model", opts->model, "model name or path to a model JSON file")
      ->required();
  cmd->add_option("--models", opts->models_dir,
                  "directory searched for bundled models (default: models, "
                  "or $CYQ_MODELS)");
  cmd->add_option("--csv", opts->csv_path, "write the report as CSV to PATH");
}

cyq::ParsedModel load(const CommonOptions& opts) {
  cyq::ParsedModel model = cyq::load_model(
      cyq::resolve_model_path(opts.model, opts.models_dir));
  if (opts.think >= 0) model.workload.think_time = opts.think;
  if (opts.transactions > 0) model.workload.transactions = opts.transactions;
  cyq::validate_workload(model.workload);
  return model;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed cyclic queueing network analyzer"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  bool exact = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "aggregates, responsiveness table, critical points");
  add_common(analyze, &analyze_opts);
  analyze->add_option("--n", analyze_opts.n_range,
                      "window range A..B (default 1..15)");
  analyze->add_flag("--exact", exact,
                    "add exact MVA columns next to the closed form");
  analyze->add_option("--think", analyze_opts.think,
                      "override think time T(u), seconds");
  analyze->add_option("--transactions", analyze_opts.transactions,
                      "override transactions per session n");

  CommonOptions decomp_opts;
  decomp_opts.n_range = "1..20";
  long host = 0;
  double fraction = 0.75;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "flow-equivalent decomposition around the host");
  add_common(decompose, &decomp_opts);
  decompose->add_option("--host", host,
                        "host index (default: model host_index, else K)");
  decompose->add_option("--fraction", fraction,
                        "assumed fraction phi of gamma_e* (default 0.75)");
  decompose->add_option("--n", decomp_opts.n_range,
                        "curve population range, upper bound used");

  CommonOptions sim_opts;
  sim_opts.n_range = "1";
  std::string dist = "exp";
  std::uint64_t seed = 1;
  int reps = 5;
  double horizon = 5000;
  double warmup = -1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "discrete-event simulation of the cyclic link");
  add_common(simulate, &sim_opts);
  simulate->add_option("--n", sim_opts.n_range, "window size N (single value)");
  simulate->add_option("--dist", dist, "service distribution: exp | det");
  simulate->add_option("--seed", seed, "master seed (default 1)");
  simulate->add_option("--reps", reps, "independent replications (default 5)");
  simulate->add_option("--horizon", horizon,
                       "simulated seconds per replication (default 5000)");
  simulate->add_option("--warmup", warmup,
                       "discarded prefix, seconds (default: 10% of horizon)");
  simulate->add_option("--think", sim_opts.think,
                       "think stage delay Z, seconds (default 0)");

  CommonOptions sweep_opts;
  sweep_opts.n_range = "1..20";
  double sweep_think = 0;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "exact MVA curve vs the closed-form responsiveness");
  add_common(sweep, &sweep_opts);
  sweep->add_option("--n", sweep_opts.n_range, "window range A..B");
  sweep->add_option("--think", sweep_think, "think time Z for the exact solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) {
      const cyq::ParsedModel model = load(analyze_opts);
      const RangeN range = parse_range(analyze_opts.n_range);
      const cyq::AnalyzeReport report =
          cyq::run_analyze(model, range.from, range.to, exact);
      std::cout << cyq::render_text(report);
      write_csv(analyze_opts.csv_path, cyq::emit_csv(report));
    } else if (*decompose) {
      const cyq::ParsedModel model = load(decomp_opts);
      const RangeN range = parse_range(decomp_opts.n_range);
      const Eigen::Index host_index = host > 0 ? host : model.host_index;
      const cyq::DecomposeReport report =
          cyq::run_decompose(model, host_index, fraction, range.to);
      std::cout << cyq::render_text(report);
      write_csv(decomp_opts.csv_path, cyq::emit_csv(report));
    } else if (*simulate) {
      const cyq::ParsedModel model = load(sim_opts);
      const RangeN range = parse_range(sim_opts.n_range);
      if (range.from != range.to)
        throw cyq::InvalidArgument("simulate takes a single window size N");
      cyq::SimConfig config{model.profile};
      config.window_n = range.from;
      config.think_time = sim_opts.think >= 0 ? sim_opts.think : 0.0;
      if (dist == "exp")
        config.distribution = cyq::ServiceDistribution::exponential;
      else if (dist == "det")
        config.distribution = cyq::ServiceDistribution::deterministic;
      else
        throw cyq::InvalidArgument("unknown distribution \"" + dist + "\"");
      config.horizon = horizon;
      config.warmup = warmup >= 0 ? warmup : cyq::kDefaultWarmupFraction * horizon;
      config.replications = reps;
      config.seed = seed;
      const cyq::SimulateReport report = cyq::run_simulate(model, config);
      std::cout << cyq::render_text(report);
      write_csv(sim_opts.csv_path, cyq::emit_csv(report));
    } else if (*sweep) {
      const cyq::ParsedModel model = load(sweep_opts);
      const RangeN range = parse_range(sweep_opts.n_range);
      const cyq::SweepReport report =
          cyq::run_sweep(model, range.from, range.to, sweep_think);
      std::cout << cyq::render_text(report);
      write_csv(sweep_opts.csv_path, cyq::emit_csv(report));
    }
  } catch (const cyq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cyq::MissingField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cyq::UnknownField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cyq::DegenerateDecomposition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const cyq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
