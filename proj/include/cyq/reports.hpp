#pragma once

#include <string>
#include <vector>

#include "cyq/decomp.hpp"
#include "cyq/model_file.hpp"
#include "cyq/mva.hpp"
#include "cyq/oplaws.hpp"
#include "cyq/sim.hpp"

namespace cyq {

// analyze: aggregates, responsiveness table, critical points.
struct AnalyzeRow {
  long window_n = 0;
  double r_approx = 0;  // fraction
  double e_approx = 0;  // seconds
  double x_exact = 0;   // filled when the exact flag was set
  double e_exact = 0;
  double r_exact = 0;
};

struct AnalyzeReport {
  std::string label;
  long servers = 0;
  SystemSummary summary;
  bool has_exact = false;
  std::vector<AnalyzeRow> rows;
  long n_star = 0;
  long m_star = 0;
  double think_time = 0;
  int transactions = 1;
  std::vector<std::string> notes;
};

AnalyzeReport run_analyze(const ParsedModel& model, long n_from, long n_to,
                          bool exact);

// decompose: host vs flow-equivalent subnetwork.
struct CurveRow {
  long population = 0;
  double gamma_e = 0;   // subnetwork throughput with j requests
  double x_norton = 0;  // two-station solve at the same total population
  double x_full = 0;    // full-network MVA
};

struct DecomposeReport {
  std::string label;
  long servers = 0;
  Eigen::Index host_index = 0;
  double host_service = 0;
  Eigen::Index subnet_bottleneck_index = 0;  // original 1-based numbering
  FlowBalanceReport balance;                 // heuristic lambda_K
  double rho_host_before = 0;  // host utilization at the full-network cap
  bool flow_balanced = false;  // lambda_K matches the assumed gamma_e
  long balance_population = 0;  // smallest j with gamma_e(j) >= lambda_K
  double norton_max_rel_err = 0;
  std::vector<CurveRow> curve;
  std::vector<std::string> notes;
};

DecomposeReport run_decompose(const ParsedModel& model,
                              Eigen::Index host_index, double fraction,
                              long max_population);

// simulate: replication aggregate plus the analytic comparison when the
// service distribution permits one.
struct ServerRow {
  Eigen::Index server = 0;
  double service_time = 0;
  double rho_sim = 0;
  double rho_mva = 0;
};

struct SimulateReport {
  std::string label;
  SimConfig config;
  SimResult result;
  bool has_mva = false;
  double x_mva = 0;
  double e_mva = 0;
  std::vector<ServerRow> servers;
};

SimulateReport run_simulate(const ParsedModel& model, const SimConfig& config);

// sweep: exact vs closed-form responsiveness across a population range.
struct SweepRow {
  long window_n = 0;
  double x_exact = 0;
  double e_exact = 0;
  double r_exact = 0;
  double r_approx = 0;
};

struct SweepReport {
  std::string label;
  long servers = 0;
  SystemSummary summary;
  double think_time = 0;
  std::vector<SweepRow> rows;
};

SweepReport run_sweep(const ParsedModel& model, long n_from, long n_to,
                      double think_time);

std::string render_text(const AnalyzeReport& report);
std::string render_text(const DecomposeReport& report);
std::string render_text(const SimulateReport& report);
std::string render_text(const SweepReport& report);

// CSV with a header row, LF endings, '.' decimal separator, full-precision
// cells.
std::string emit_csv(const AnalyzeReport& report);
std::string emit_csv(const DecomposeReport& report);
std::string emit_csv(const SimulateReport& report);
std::string emit_csv(const SweepReport& report);

}  // namespace cyq
