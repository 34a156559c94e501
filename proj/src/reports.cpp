#include "cyq/reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyq/format.hpp"

namespace cyq {

namespace {

std::string pad_left(const std::string& text, int width) {
  if (static_cast<int>(text.size()) >= width) return text;
  return std::string(static_cast<std::size_t>(width) - text.size(), ' ') +
         text;
}

std::string percent(double fraction) {
  return format_rounded(100.0 * fraction, 1);
}

void append_notes(std::ostringstream& out,
                  const std::vector<std::string>& notes) {
  if (notes.empty()) return;
  out << "notes:\n";
  for (const auto& note : notes) out << "  - " << note << "\n";
}

}  // namespace

AnalyzeReport run_analyze(const ParsedModel& model, long n_from, long n_to,
                          bool exact) {
  AnalyzeReport report;
  report.label = model.label;
  report.servers = model.profile.size();
  report.summary = summarize(model.profile);
  report.think_time = model.workload.think_time;
  report.transactions = model.workload.transactions;

  for (const auto& point : responsiveness_table(report.summary, n_from, n_to)) {
    AnalyzeRow row;
    row.window_n = point.window_n;
    row.r_approx = point.responsiveness;
    row.e_approx = point.elapsed;
    report.rows.push_back(row);
  }

  if (exact) {
    report.has_exact = true;
    if (n_to >= 1) {
      const MvaSolution solution = solve_mva(model.profile, n_to, 0.0);
      for (auto& row : report.rows) {
        if (row.window_n == 0) {
          row.r_exact = 1.0;
          continue;
        }
        row.x_exact = solution.throughput(row.window_n);
        row.e_exact = solution.elapsed(row.window_n);
        row.r_exact =
            responsiveness_exact(report.summary, row.e_exact, row.window_n)
                .responsiveness;
      }
    } else {
      for (auto& row : report.rows) row.r_exact = 1.0;
    }
  }

  const CriticalPoints points =
      critical_points(report.summary, model.workload);
  report.n_star = points.n_star;
  report.m_star = points.m_star;

  if (model.label == "table1") {
    // The tabulation this model ships with rounds a few derived values
    // differently; computed values win, the reference figures are quoted
    // for transparency.
    const double gamma_rounded =
        std::round(1000.0 * report.summary.gamma_max) / 1000.0;
    const double rho_host = gamma_rounded * model.profile.times().tail(1)[0];
    const double r_star =
        responsiveness_approx(report.summary, 110).responsiveness;
    report.notes.push_back("advisory: computed M* = " +
                           std::to_string(report.m_star) +
                           "; the published tabulation for this model quotes "
                           "M* = 270");
    report.notes.push_back(
        "advisory: host utilization at the saturation rate is " +
        format_rounded(gamma_rounded, 3) + " x " +
        format_rounded(model.profile.times().tail(1)[0], 3) + " = " +
        format_rounded(rho_host, 3) + "; the published figure is 0.769");
    report.notes.push_back("advisory: R at N* = 110 evaluates to " +
                           format_rounded(100.0 * r_star, 2) +
                           "%; the published figure is 8.75%");
  }
  return report;
}

DecomposeReport run_decompose(const ParsedModel& model,
                              Eigen::Index host_index, double fraction,
                              long max_population) {
  if (max_population < 1)
    throw InvalidArgument("population must be >= 1");

  DecomposeReport report;
  report.label = model.label;
  report.servers = model.profile.size();
  report.host_index = host_index;
  report.host_service = model.profile.service_time(host_index);

  const ServiceProfile sub = subnetwork(model.profile, host_index);
  const SystemSummary sub_summary = summarize(sub);
  report.subnet_bottleneck_index =
      sub_summary.bottleneck_index < host_index
          ? sub_summary.bottleneck_index
          : sub_summary.bottleneck_index + 1;

  report.balance = balanced_host_utilization(fes_max_throughput(sub),
                                             fraction, report.host_service);
  report.balance.host_index = host_index;
  report.rho_host_before =
      summarize(model.profile).gamma_max * report.host_service;

  const FesCurve curve = fes_curve(sub, max_population);
  const MvaSolution full = solve_mva(model.profile, max_population, 0.0);
  report.curve.reserve(static_cast<std::size_t>(max_population));
  for (long n = 1; n <= max_population; ++n) {
    CurveRow row;
    row.population = n;
    row.gamma_e = curve.rate(n);
    row.x_norton = norton_solve(curve, report.host_service, n).throughput;
    row.x_full = full.throughput(n);
    report.norton_max_rel_err =
        std::max(report.norton_max_rel_err,
                 std::abs(row.x_norton - row.x_full) / row.x_full);
    report.curve.push_back(row);
  }

  report.flow_balanced = flow_balance_check(
      report.balance.lambda_k, fraction * report.balance.gamma_e_star, 1e-9);
  for (const auto& row : report.curve) {
    if (row.gamma_e >= report.balance.lambda_k) {
      report.balance_population = row.population;
      break;
    }
  }
  return report;
}

SimulateReport run_simulate(const ParsedModel& model,
                            const SimConfig& config) {
  SimulateReport report{model.label, config, simulate(config), false, 0, 0, {}};

  Eigen::ArrayXd rho_mva;
  if (config.distribution == ServiceDistribution::exponential &&
      config.window_n >= 1) {
    const MvaSolution solution =
        solve_mva(config.profile, config.window_n, config.think_time);
    report.has_mva = true;
    report.x_mva = solution.throughput(config.window_n);
    report.e_mva = solution.elapsed(config.window_n);
    rho_mva = report.x_mva * config.profile.times();
  }

  for (Eigen::Index i = 0; i < config.profile.size(); ++i) {
    ServerRow row;
    row.server = i + 1;
    row.service_time = config.profile.times()[i];
    row.rho_sim = report.result.utilization[i];
    row.rho_mva = report.has_mva ? rho_mva[i] : 0.0;
    report.servers.push_back(row);
  }
  return report;
}

SweepReport run_sweep(const ParsedModel& model, long n_from, long n_to,
                      double think_time) {
  if (n_from < 0 || n_from > n_to)
    throw InvalidArgument("window range must satisfy 0 <= from <= to");

  SweepReport report;
  report.label = model.label;
  report.servers = model.profile.size();
  report.summary = summarize(model.profile);
  report.think_time = think_time;

  const MvaSolution solution =
      solve_mva(model.profile, std::max(n_to, 1L), think_time);
  for (long n = n_from; n <= n_to; ++n) {
    SweepRow row;
    row.window_n = n;
    if (n >= 1) {
      row.x_exact = solution.throughput(n);
      row.e_exact = solution.elapsed(n);
    }
    row.r_exact =
        responsiveness_exact(report.summary, row.e_exact, n).responsiveness;
    row.r_approx = responsiveness_approx(report.summary, n).responsiveness;
    report.rows.push_back(row);
  }
  return report;
}

std::string render_text(const AnalyzeReport& report) {
  std::ostringstream out;
  out << "analyze: " << report.label << " (K = " << report.servers << ")\n";
  out << "service ability     sigma(s) = " << format_rounded(report.summary.sigma, 3)
      << " s\n";
  out << "bottleneck          S_" << report.summary.bottleneck_index
      << ", s_max = " << format_rounded(report.summary.s_max, 3) << " s\n";
  out << "throughput bounds   " << format_rounded(report.summary.gamma_min, 3)
      << " <= gamma(N) <= " << format_rounded(report.summary.gamma_max, 3)
      << " req/s\n\n";

  out << pad_left("N", 6) << pad_left("R(s)%", 10) << pad_left("E(N) s", 12);
  if (report.has_exact)
    out << pad_left("X req/s", 12) << pad_left("E_mva s", 12)
        << pad_left("R_mva%", 10);
  out << "\n";
  for (const auto& row : report.rows) {
    out << pad_left(std::to_string(row.window_n), 6)
        << pad_left(percent(row.r_approx), 10)
        << pad_left(format_rounded(row.e_approx, 3), 12);
    if (report.has_exact)
      out << pad_left(format_rounded(row.x_exact, 3), 12)
          << pad_left(format_rounded(row.e_exact, 3), 12)
          << pad_left(percent(row.r_exact), 10);
    out << "\n";
  }

  out << "\ncritical points     N* = " << report.n_star
      << ", M* = " << report.m_star << "   (n = " << report.transactions
      << ", T(u) = " << format_rounded(report.think_time, 3) << " s)\n";
  append_notes(out, report.notes);
  return out.str();
}

std::string render_text(const DecomposeReport& report) {
  std::ostringstream out;
  out << "decompose: " << report.label << " (K = " << report.servers << ")\n";
  out << "host                S_" << report.host_index
      << ", s_K = " << format_rounded(report.host_service, 3) << " s\n";
  out << "subnet bottleneck   S_" << report.subnet_bottleneck_index
      << ", s_max(K-1) = " << format_rounded(report.balance.subnet_bottleneck, 3)
      << " s\n";
  out << "gamma_e*            " << format_rounded(report.balance.gamma_e_star, 3)
      << " req/s\n";
  out << "phi                 " << format_rounded(report.balance.assumed_fraction, 2)
      << "\n";
  out << "lambda_K            " << format_rounded(report.balance.lambda_k, 3)
      << " req/s\n";
  out << "rho_K(new)          " << format_rounded(report.balance.rho_k_new, 3)
      << (report.balance.steady_state ? "  [steady-state]" : "  [saturated]")
      << "\n";
  out << "rho_K before        " << format_rounded(report.rho_host_before, 3)
      << (report.rho_host_before < 1.0 ? "  [steady-state]" : "  [saturated]")
      << "\n";
  out << "flow balance        lambda_K = gamma_e: "
      << (report.flow_balanced ? "satisfied" : "violated");
  if (report.balance_population > 0)
    out << "; subnetwork sustains lambda_K from j = "
        << report.balance_population;
  else
    out << "; lambda_K above the subnetwork capacity within the curve";
  out << "\n";
  out << "norton check        max relative gap vs full MVA over n = 1.."
      << report.curve.size() << ": "
      << format_full(report.norton_max_rel_err) << "\n\n";

  out << pad_left("j", 6) << pad_left("gamma_e(j)", 14)
      << pad_left("X_norton(j)", 14) << pad_left("X_full(j)", 14) << "\n";
  for (const auto& row : report.curve)
    out << pad_left(std::to_string(row.population), 6)
        << pad_left(format_rounded(row.gamma_e, 6), 14)
        << pad_left(format_rounded(row.x_norton, 6), 14)
        << pad_left(format_rounded(row.x_full, 6), 14) << "\n";
  append_notes(out, report.notes);
  return out.str();
}

std::string render_text(const SimulateReport& report) {
  const SimConfig& config = report.config;
  std::ostringstream out;
  out << "simulate: " << report.label << " (K = " << config.profile.size()
      << ")\n";
  out << "config              N = " << config.window_n
      << ", Z = " << format_rounded(config.think_time, 3) << " s, dist = "
      << (config.distribution == ServiceDistribution::exponential ? "exp"
                                                                  : "det")
      << ", seed = " << config.seed << ", reps = " << config.replications
      << ", horizon = " << format_rounded(config.horizon, 3)
      << " s, warmup = " << format_rounded(config.warmup, 3) << " s\n";
  out << "throughput          " << format_rounded(report.result.throughput_mean, 6)
      << " +/- " << format_rounded(report.result.throughput_halfwidth, 6)
      << " req/s\n";
  out << "elapsed             " << format_rounded(report.result.elapsed_mean, 6)
      << " +/- " << format_rounded(report.result.elapsed_halfwidth, 6)
      << " s\n";
  if (report.has_mva)
    out << "mva reference       X = " << format_rounded(report.x_mva, 6)
        << " req/s, E = " << format_rounded(report.e_mva, 6) << " s\n";
  out << "\n";

  out << pad_left("server", 8) << pad_left("s_i", 10)
      << pad_left("rho_sim", 10);
  if (report.has_mva) out << pad_left("rho_mva", 10);
  out << "\n";
  for (const auto& row : report.servers) {
    out << pad_left("S_" + std::to_string(row.server), 8)
        << pad_left(format_rounded(row.service_time, 3), 10)
        << pad_left(format_rounded(row.rho_sim, 4), 10);
    if (report.has_mva) out << pad_left(format_rounded(row.rho_mva, 4), 10);
    out << "\n";
  }
  return out.str();
}

std::string render_text(const SweepReport& report) {
  std::ostringstream out;
  out << "sweep: " << report.label << " (K = " << report.servers
      << "), Z = " << format_rounded(report.think_time, 3) << " s\n\n";
  out << pad_left("N", 6) << pad_left("X(N) req/s", 14)
      << pad_left("E(N) s", 12) << pad_left("R_exact%", 12)
      << pad_left("R_approx%", 12) << "\n";
  for (const auto& row : report.rows)
    out << pad_left(std::to_string(row.window_n), 6)
        << pad_left(format_rounded(row.x_exact, 6), 14)
        << pad_left(format_rounded(row.e_exact, 3), 12)
        << pad_left(percent(row.r_exact), 12)
        << pad_left(percent(row.r_approx), 12) << "\n";
  return out.str();
}

std::string emit_csv(const AnalyzeReport& report) {
  std::ostringstream out;
  out << "n,responsiveness_approx,elapsed_approx";
  if (report.has_exact)
    out << ",throughput_exact,elapsed_exact,responsiveness_exact";
  out << "\n";
  for (const auto& row : report.rows) {
    out << row.window_n << "," << format_full(row.r_approx) << ","
        << format_full(row.e_approx);
    if (report.has_exact)
      out << "," << format_full(row.x_exact) << ","
          << format_full(row.e_exact) << "," << format_full(row.r_exact);
    out << "\n";
  }
  return out.str();
}

std::string emit_csv(const DecomposeReport& report) {
  std::ostringstream out;
  out << "population,gamma_e,x_norton,x_full\n";
  for (const auto& row : report.curve)
    out << row.population << "," << format_full(row.gamma_e) << ","
        << format_full(row.x_norton) << "," << format_full(row.x_full)
        << "\n";
  return out.str();
}

std::string emit_csv(const SimulateReport& report) {
  std::ostringstream out;
  out << "server,service_time,utilization_sim";
  if (report.has_mva) out << ",utilization_mva";
  out << ",throughput_mean,throughput_halfwidth,elapsed_mean,"
         "elapsed_halfwidth,replications\n";
  for (const auto& row : report.servers) {
    out << row.server << "," << format_full(row.service_time) << ","
        << format_full(row.rho_sim);
    if (report.has_mva) out << "," << format_full(row.rho_mva);
    out << "," << format_full(report.result.throughput_mean) << ","
        << format_full(report.result.throughput_halfwidth) << ","
        << format_full(report.result.elapsed_mean) << ","
        << format_full(report.result.elapsed_halfwidth) << ","
        << report.result.replications << "\n";
  }
  return out.str();
}

std::string emit_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "n,x_exact,e_exact,r_exact,r_approx\n";
  for (const auto& row : report.rows)
    out << row.window_n << "," << format_full(row.x_exact) << ","
        << format_full(row.e_exact) << "," << format_full(row.r_exact) << ","
        << format_full(row.r_approx) << "\n";
  return out.str();
}

}  // namespace cyq
