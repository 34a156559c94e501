#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <vector>

#include "cyq/format.hpp"
#include "cyq/reports.hpp"
#include "test_util.hpp"

using namespace cyq;

namespace {

const std::string kModelsDir = CYQ_MODELS_DIR;

ParsedModel bundled(const char* name) {
  return load_model(resolve_model_path(name, kModelsDir));
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("format_rounded rounds half away from zero") {
  CHECK(format_rounded(91.25, 1) == "91.3");
  CHECK(format_rounded(-0.15, 1) == "-0.2");
  CHECK(format_rounded(0.8295, 3) == "0.830");
  CHECK(format_rounded(1.0, 3) == "1.000");
}

TEST_CASE("format_full survives a parse round trip") {
  for (double value : {1.0 / 3.0, 10.14, 0.9998080523225479, 1e-17}) {
    const std::string text = format_full(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
}

TEST_CASE("analyze report reproduces the worked example") {
  const AnalyzeReport report = run_analyze(bundled("table1"), 1, 15, false);
  CHECK(report.servers == 15);
  CHECK(report.n_star == 110);
  CHECK(report.m_star == 266);
  REQUIRE(report.rows.size() == 15);
  CHECK(format_rounded(100 * report.rows[0].r_approx, 1) == "91.3");
  CHECK(format_rounded(100 * report.rows[10].r_approx, 1) == "48.9");
  CHECK(format_rounded(100 * report.rows[14].r_approx, 1) == "41.2");

  const std::string text = render_text(report);
  CHECK(text.find("sigma(s) = 10.140 s") != std::string::npos);
  CHECK(text.find("S_7") != std::string::npos);
  CHECK(text.find("N* = 110") != std::string::npos);
  CHECK(text.find("M* = 266") != std::string::npos);

  // Advisory footnotes for the bundled example.
  REQUIRE(!report.notes.empty());
  bool mentions_published_m = false;
  for (const auto& note : report.notes)
    if (note.find("270") != std::string::npos) mentions_published_m = true;
  CHECK(mentions_published_m);
  CHECK(text.find("270") != std::string::npos);
}

TEST_CASE("analyze exact columns sit below the closed form") {
  const AnalyzeReport report = run_analyze(bundled("table1"), 1, 12, true);
  REQUIRE(report.has_exact);
  for (const auto& row : report.rows) {
    CHECK(row.r_exact <= row.r_approx * (1 + 1e-12));
    CHECK(row.x_exact <= report.summary.gamma_max * (1 + 1e-12));
    CHECK(row.e_exact >= row.e_approx * (1 - 1e-12));
  }
}

TEST_CASE("analyze handles the empty-system row") {
  const AnalyzeReport report = run_analyze(bundled("single-server"), 0, 0, false);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].r_approx == 1.0);
  CHECK(render_text(report).find("100.0") != std::string::npos);
}

TEST_CASE("analyze csv carries one row per window size at full precision") {
  const AnalyzeReport report = run_analyze(bundled("table1"), 1, 15, false);
  const std::string csv = emit_csv(report);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 15);
  for (int i = 0; i < 15; ++i) {
    CHECK(rows[i][0] == i + 1);
    CHECK(rows[i][1] == report.rows[i].r_approx);  // exact round trip
    CHECK(rows[i][2] == report.rows[i].e_approx);
  }
  CHECK(csv.find("\r") == std::string::npos);  // LF endings only
}

TEST_CASE("csv keeps the header even without rows") {
  AnalyzeReport empty;
  CHECK(emit_csv(empty) == "n,responsiveness_approx,elapsed_approx\n");
}

TEST_CASE("decompose report reproduces the balancing walk-through") {
  const DecomposeReport report =
      run_decompose(bundled("table1-swapped"), 15, 0.75, 20);
  CHECK(report.host_index == 15);
  CHECK(report.subnet_bottleneck_index == 11);
  CHECK(format_rounded(report.balance.gamma_e_star, 3) == "1.145");
  CHECK(format_rounded(report.balance.lambda_k, 3) == "0.859");
  CHECK(format_rounded(report.balance.rho_k_new, 3) == "0.829");
  CHECK(report.balance.steady_state);
  CHECK(format_rounded(report.rho_host_before, 3) == "1.000");
  CHECK(report.flow_balanced);
  CHECK(report.norton_max_rel_err <= 1e-9);
  CHECK(report.balance_population > 0);

  const std::string text = render_text(report);
  CHECK(text.find("1.145") != std::string::npos);
  CHECK(text.find("0.859") != std::string::npos);
  CHECK(text.find("0.829") != std::string::npos);
  CHECK(text.find("[saturated]") != std::string::npos);

  const auto rows = parse_csv(emit_csv(report));
  REQUIRE(rows.size() == 20);
  CHECK(rows[0][1] == report.curve[0].gamma_e);
}

TEST_CASE("decompose rejects a single-server model") {
  CHECK_THROWS_AS(run_decompose(bundled("single-server"), 1, 0.75, 5),
                  DegenerateDecomposition);
}

TEST_CASE("norton equality holds for the two-server fixture") {
  const DecomposeReport report = run_decompose(bundled("two-server"), 2, 0.75, 10);
  CHECK(report.norton_max_rel_err <= 1e-12);
}

TEST_CASE("sweep rows pair the exact and closed-form measures") {
  const SweepReport report = run_sweep(bundled("table1"), 0, 10, 0.0);
  REQUIRE(report.rows.size() == 11);
  CHECK(report.rows[0].r_exact == 1.0);
  CHECK(report.rows[0].r_approx == 1.0);
  for (const auto& row : report.rows)
    CHECK(row.r_exact <= row.r_approx * (1 + 1e-12));
  const auto rows = parse_csv(emit_csv(report));
  REQUIRE(rows.size() == 11);
}

TEST_CASE("simulate report compares against MVA when exponential") {
  const ParsedModel model = bundled("two-server");
  SimConfig config{model.profile};
  config.window_n = 2;
  config.horizon = 800;
  config.warmup = 80;
  config.replications = 10;
  config.seed = 5;
  const SimulateReport report = run_simulate(model, config);
  REQUIRE(report.has_mva);
  CHECK(report.x_mva == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  REQUIRE(report.servers.size() == 2);
  CHECK(report.servers[1].rho_mva == doctest::Approx(6.0 / 7.0).epsilon(1e-12));

  const auto rows = parse_csv(emit_csv(report));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].size() == 9);  // per-server metrics plus the aggregates
  CHECK(rows[0][4] == report.result.throughput_mean);

  // Deterministic service skips the MVA comparison.
  config.distribution = ServiceDistribution::deterministic;
  const SimulateReport det = run_simulate(model, config);
  CHECK(!det.has_mva);
  CHECK(parse_csv(emit_csv(det))[0].size() == 8);
}

TEST_CASE("rendered reports are byte-stable") {
  const ParsedModel model = bundled("two-server");
  SimConfig config{model.profile};
  config.window_n = 2;
  config.horizon = 500;
  config.warmup = 50;
  config.replications = 5;
  config.seed = 11;
  const std::string once = render_text(run_simulate(model, config));
  const std::string twice = render_text(run_simulate(model, config));
  CHECK(once == twice);
}
