// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here; the checks run against the bundled model
// fixtures and fixed seeds so the outcome is reproducible.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyq/decomp.hpp"
#include "cyq/format.hpp"
#include "cyq/model_file.hpp"
#include "cyq/mva.hpp"
#include "cyq/oplaws.hpp"
#include "cyq/reports.hpp"
#include "cyq/sim.hpp"

using namespace cyq;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int id, std::string name, double budget_ms)
      : id_(id), name_(std::move(name)), budget_ms_(budget_ms),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && why_.empty()) why_ = detail;
    ok_ = ok_ && ok;
  }

  void finish() {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    if (budget_ms_ > 0 && ms >= budget_ms_) {
      ok_ = false;
      if (why_.empty())
        why_ = "runtime " + format_rounded(ms, 3) + " ms over budget " +
               format_rounded(budget_ms_, 0) + " ms";
    }
    std::printf("[%s] %2d. %s (%.3f ms)%s%s\n", ok_ ? "PASS" : "FAIL", id_,
                name_.c_str(), ms, why_.empty() ? "" : " -- ",
                why_.c_str());
    if (!ok_) ++failures;
  }

 private:
  int id_;
  std::string name_;
  double budget_ms_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string why_;
};

ParsedModel bundled(const char* name) {
  return load_model(resolve_model_path(name, CYQ_MODELS_DIR));
}

ServiceProfile random_profile(std::mt19937_64& gen, int k_min, int k_max,
                              double lo, double hi) {
  std::uniform_int_distribution<int> pick_k(k_min, k_max);
  std::uniform_real_distribution<double> pick_time(lo, hi);
  Eigen::ArrayXd times(pick_k(gen));
  for (Eigen::Index i = 0; i < times.size(); ++i) times[i] = pick_time(gen);
  return ServiceProfile(std::move(times));
}

}  // namespace

int main() {
  const ParsedModel table1 = bundled("table1");
  const ParsedModel swapped = bundled("table1-swapped");
  const ParsedModel two_server = bundled("two-server");

  // 1. Aggregates of the worked example.
  {
    Criterion c(1, "table1 aggregates and ranking", 1.0);
    const SystemSummary summary = summarize(table1.profile);
    c.require(format_rounded(summary.sigma, 3) == "10.140",
              "sigma != 10.140");
    c.require(summary.s_max == 0.965, "s_max != 0.965");
    c.require(summary.bottleneck_index == 7, "bottleneck index != 7");
    const auto ranked = ranked_servers(table1.profile);
    const Eigen::Index expected[5] = {7, 11, 3, 6, 15};
    for (int i = 0; i < 5; ++i)
      c.require(ranked[static_cast<std::size_t>(i)].first == expected[i],
                "ranking prefix mismatch");
    c.finish();
  }

  // 2. Responsiveness table reproduction.
  {
    Criterion c(2, "responsiveness table N = 1..15", 1.0);
    const SystemSummary summary = summarize(table1.profile);
    const double printed[15] = {91.3, 84.0, 77.8, 72.4, 67.8,
                                63.7, 60.0, 56.8, 53.9, 51.3,
                                48.9, 46.7, 44.7, 42.9, 41.2};
    const auto table = responsiveness_table(summary, 1, 15);
    for (int i = 0; i < 15; ++i)
      c.require(std::abs(100.0 * table[static_cast<std::size_t>(i)]
                                     .responsiveness -
                         printed[i]) <= 0.15,
                "row " + std::to_string(i + 1) + " off by more than 0.15pp");
    c.require(format_rounded(100.0 * table[0].responsiveness, 1) == "91.3",
              "N=1 not 91.3");
    c.require(format_rounded(100.0 * table[10].responsiveness, 1) == "48.9",
              "N=11 not 48.9");
    c.require(format_rounded(100.0 * table[14].responsiveness, 1) == "41.2",
              "N=15 not 41.2");
    c.finish();
  }

  // 3. Critical points and the published-value advisory.
  {
    const AnalyzeReport report = run_analyze(table1, 1, 15, false);
    Criterion c(3, "critical points N* = 110, M* = 266 with advisory", 1.0);
    const SystemSummary summary = summarize(table1.profile);
    const long n_star = critical_request_count(summary, 10);
    c.require(n_star == 110, "N* != 110");
    c.require(critical_user_count(n_star, 15, 10, summary.s_max) == 266,
              "M* != 266");
    c.require(report.m_star == 266, "report M* != 266");
    bool advisory = false;
    for (const auto& note : report.notes)
      if (note.find("270") != std::string::npos) advisory = true;
    c.require(advisory, "no advisory quoting 270");
    c.finish();
  }

  // 4. Decomposition triple after the host swap.
  {
    Criterion c(4, "decomposition triple 1.145 / 0.859 / 0.829", 1.0);
    const ServiceProfile sub = subnetwork(swapped.profile, 15);
    const FlowBalanceReport balance = balanced_host_utilization(
        fes_max_throughput(sub), 0.75, swapped.profile.service_time(15));
    c.require(format_rounded(balance.gamma_e_star, 3) == "1.145",
              "gamma_e* != 1.145");
    c.require(format_rounded(balance.lambda_k, 3) == "0.859",
              "lambda_K != 0.859");
    c.require(format_rounded(balance.rho_k_new, 3) == "0.829",
              "rho_K(new) != 0.829");
    const double rho_before =
        summarize(swapped.profile).gamma_max *
        swapped.profile.service_time(15);
    c.require(format_rounded(rho_before, 3) == "1.000",
              "rho_host before balancing != 1.000");
    c.finish();
  }

  // 5. Exact-MVA bound properties over randomized profiles.
  {
    Criterion c(5, "MVA asymptotic bounds, 200 random profiles", 10000.0);
    std::mt19937_64 gen(501);
    std::uniform_int_distribution<long> pick_n(1, 50);
    std::vector<ServiceProfile> profiles;
    profiles.push_back(table1.profile);
    for (int i = 0; i < 200; ++i)
      profiles.push_back(random_profile(gen, 1, 10, 0.05, 2.0));
    for (const auto& profile : profiles) {
      const long max_n = pick_n(gen);
      const SystemSummary summary = summarize(profile);
      const MvaSolution solution = solve_mva(profile, max_n, 0.0);
      for (long n = 1; n <= max_n; ++n) {
        const double elapsed_floor =
            std::max(summary.sigma, n * summary.s_max);
        c.require(solution.elapsed(n) >= elapsed_floor * (1 - 1e-9),
                  "E(n) below max(sigma, n s_max)");
        c.require(solution.throughput(n) >= summary.gamma_min * (1 - 1e-9),
                  "X(n) below 1/sigma");
        c.require(solution.throughput(n) <= summary.gamma_max * (1 + 1e-9),
                  "X(n) above 1/s_max");
        const double exact =
            responsiveness_exact(summary, solution.elapsed(n), n)
                .responsiveness;
        const double approx =
            responsiveness_approx(summary, n).responsiveness;
        c.require(exact <= approx * (1 + 1e-12),
                  "closed form fails to upper-bound exact responsiveness");
      }
    }
    c.finish();
  }

  // 6. Balanced-network closed form.
  {
    Criterion c(6, "balanced network X(n) = n/((n+K-1)s)", 10.0);
    for (int k : {2, 3})
      for (double s : {0.5, 1.0}) {
        const MvaSolution solution =
            solve_mva(ServiceProfile(Eigen::ArrayXd::Constant(k, s)), 10, 0.0);
        for (long n = 1; n <= 10; ++n) {
          const double expected = n / ((n + k - 1) * s);
          c.require(std::abs(solution.throughput(n) - expected) <=
                        1e-12 * expected,
                    "closed form mismatch at K=" + std::to_string(k));
        }
      }
    c.finish();
  }

  // 7. Norton equivalence over randomized decompositions.
  {
    Criterion c(7, "Norton equivalence, 100 random profiles", 10000.0);
    std::mt19937_64 gen(701);
    std::uniform_int_distribution<long> pick_n(1, 15);
    for (int trial = 0; trial < 100; ++trial) {
      const ServiceProfile profile = random_profile(gen, 2, 8, 0.05, 2.0);
      const long n = pick_n(gen);
      const MvaSolution full = solve_mva(profile, n, 0.0);
      for (Eigen::Index host = 1; host <= profile.size(); ++host) {
        const FesCurve curve = fes_curve(subnetwork(profile, host), n);
        const NortonPoint point =
            norton_solve(curve, profile.service_time(host), n);
        c.require(std::abs(point.throughput - full.throughput(n)) <=
                      1e-9 * full.throughput(n),
                  "two-station throughput diverges from full MVA");
      }
    }
    c.finish();
  }

  // 8. Simulator vs MVA coverage.
  {
    Criterion c(8, "simulator CI covers MVA throughput", 120000.0);
    SimConfig config{two_server.profile};
    config.window_n = 2;
    config.horizon = 1500;
    config.warmup = 150;
    config.replications = 30;
    config.seed = 8001;
    const SimResult fixed = simulate(config);
    c.require(std::abs(fixed.throughput_mean - 6.0 / 7.0) <=
                  fixed.throughput_halfwidth,
              "CI misses 0.8571 on the two-server instance");

    std::mt19937_64 gen(801);
    std::uniform_int_distribution<long> pick_n(1, 10);
    int covered = 0;
    const int instances = 50;
    for (int trial = 0; trial < instances; ++trial) {
      const ServiceProfile profile = random_profile(gen, 1, 5, 0.2, 1.2);
      const long n = pick_n(gen);
      SimConfig instance{profile};
      instance.window_n = n;
      instance.horizon = 600 * profile.times().sum();
      instance.warmup = kDefaultWarmupFraction * instance.horizon;
      instance.replications = 30;
      instance.seed = 8100 + static_cast<std::uint64_t>(trial);
      const SimResult result = simulate(instance);
      const double exact = solve_mva(profile, n, 0.0).throughput(n);
      if (std::abs(result.throughput_mean - exact) <=
          result.throughput_halfwidth)
        ++covered;
    }
    c.require(covered >= 45, "coverage " + std::to_string(covered) + "/50");
    c.finish();
  }

  // 9. Saturation behavior at the critical window.
  {
    Criterion c(9, "table1 at N = 110: bottleneck saturated, host at 0.760",
                60000.0);
    SimConfig config{table1.profile};
    config.window_n = 110;
    config.horizon = 8000;
    config.warmup = 800;
    config.replications = 5;
    config.seed = 9001;
    const SimResult result = simulate(config);
    c.require(result.utilization[6] > 0.99, "server 7 utilization <= 0.99");
    c.require(std::abs(result.utilization[14] - 0.760) <= 0.02,
              "host utilization outside 0.760 +/- 0.02");
    c.finish();
  }

  // 10. Determinism and CSV round trips.
  {
    Criterion c(10, "byte-identical reports and CSV round trips", 0.0);
    SimConfig config{two_server.profile};
    config.window_n = 2;
    config.horizon = 800;
    config.warmup = 80;
    config.replications = 8;
    config.seed = 1010;
    const SimulateReport first = run_simulate(two_server, config);
    const SimulateReport second = run_simulate(two_server, config);
    c.require(render_text(first) == render_text(second),
              "rendered simulation reports differ");
    c.require(emit_csv(first) == emit_csv(second), "simulation CSVs differ");

    const AnalyzeReport analysis = run_analyze(table1, 1, 15, true);
    const std::string csv = emit_csv(analysis);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    std::size_t row = 0;
    bool round_trip = true;
    while (std::getline(lines, line)) {
      std::istringstream cells(line);
      std::string cell;
      std::vector<double> values;
      while (std::getline(cells, cell, ','))
        values.push_back(std::strtod(cell.c_str(), nullptr));
      const AnalyzeRow& expected = analysis.rows[row++];
      round_trip = round_trip && values.size() == 6 &&
                   values[0] == expected.window_n &&
                   values[1] == expected.r_approx &&
                   values[2] == expected.e_approx &&
                   values[3] == expected.x_exact &&
                   values[4] == expected.e_exact &&
                   values[5] == expected.r_exact;
    }
    c.require(round_trip && row == analysis.rows.size(),
              "analyze CSV does not parse back to equal values");
    c.finish();
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
